#pragma once

#include "filiform/matrix.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace filiform {

enum class Parity { even, odd };

inline Parity operator+(Parity a, Parity b) {
    return (a == b) ? Parity::even : Parity::odd;
}

/// One graded basis vector: X_0..X_n (even) or Y_1..Y_m (odd).
struct BasisElement {
    Parity parity;
    int index;
    auto operator<=>(const BasisElement&) const = default;
};

std::string to_string(const BasisElement& e);
/// Parses "X3" or "Y2". Throws std::invalid_argument on malformed input.
BasisElement basis_element_from_string(const std::string& s);

/// Element of the graded space, sparse over the basis.
class SuperVector {
public:
    SuperVector() = default;
    static SuperVector unit(BasisElement e);
    static SuperVector from_parts(const SparseVec& even, const SparseVec& odd);

    void add(BasisElement e, const Rational& c);
    Rational coefficient(BasisElement e) const;
    bool is_zero() const { return c_.empty(); }
    bool is_homogeneous(Parity p) const;
    SparseVec even_part() const;
    SparseVec odd_part() const;
    const std::map<BasisElement, Rational>& coefficients() const { return c_; }

    SuperVector& operator+=(const SuperVector& o);
    SuperVector& operator*=(const Rational& c);
    friend SuperVector operator+(SuperVector a, const SuperVector& b) { return a += b; }
    friend SuperVector operator*(const Rational& c, SuperVector v) { return v *= c; }
    bool operator==(const SuperVector&) const = default;

    std::string to_string() const;

private:
    std::map<BasisElement, Rational> c_;
};

/// Structure constants of a Z2-graded algebra on the basis
/// (X_0..X_n | Y_1..Y_m): C holds [X_i,X_j] for i<j, D holds [X_i,Y_t],
/// E holds [Y_t,Y_r] for t<=r. Remaining values follow from the graded
/// antisymmetry [x,y] = -(-1)^{|x||y|}[y,x].
struct StructureConstants {
    std::map<std::pair<int, int>, SparseVec> C;  // (i<j) -> even vector
    std::map<std::pair<int, int>, SparseVec> D;  // (i,t) -> odd vector
    std::map<std::pair<int, int>, SparseVec> E;  // (t<=r) -> even vector

    bool operator==(const StructureConstants&) const = default;
};

class SuperAlgebra {
public:
    /// Validates index ranges and drops zero values. Throws on malformed
    /// tensors (out-of-range indices, keys violating i<j / t<=r).
    SuperAlgebra(int n, int m, StructureConstants sc);

    int n() const { return n_; }
    int m() const { return m_; }
    int dim_even() const { return n_ + 1; }
    int dim_odd() const { return m_; }
    int dim() const { return n_ + 1 + m_; }

    /// [X_i, X_j], even result.
    SparseVec bracket_ee(int i, int j) const;
    /// [X_i, Y_t], odd result.
    SparseVec bracket_eo(int i, int t) const;
    /// [Y_t, Y_r], even result (symmetric slot).
    SparseVec bracket_oo(int t, int r) const;
    SuperVector bracket(const SuperVector& x, const SuperVector& y) const;
    SuperVector bracket(BasisElement x, BasisElement y) const;

    const StructureConstants& constants() const { return sc_; }

    bool operator==(const SuperAlgebra&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    StructureConstants sc_;
};

/// The model filiform superalgebra: [X_0,X_i] = X_{i+1}, [X_0,Y_t] = Y_{t+1},
/// all other brackets zero.
SuperAlgebra lnm(int n, int m);
/// All brackets zero.
SuperAlgebra abelian_superalgebra(int n, int m);

struct JacobiViolation {
    std::array<BasisElement, 3> triple;
    SuperVector residual;
};

/// Evaluates the graded Jacobi sum on every canonical basis triple
/// (strictly increasing even indices, non-decreasing odd indices) and
/// returns the triples with nonzero residual.
std::vector<JacobiViolation> check_jacobi(const SuperAlgebra& a);

struct NilData {
    std::vector<Subspace> even_series;  // C^0(G0), C^1(G0), ... until 0 or stable
    std::vector<Subspace> odd_series;   // C^0(G1), C^1(G1), ...
    std::optional<std::pair<int, int>> nilindex;
};

/// Descending central sequences C^{i+1}(G0) = [G0, C^i(G0)] and
/// C^{i+1}(G1) = [G0, C^i(G1)], with the super-nilindex when both reach 0.
NilData lower_central_series(const SuperAlgebra& a);
std::optional<std::pair<int, int>> super_nilindex(const SuperAlgebra& a);

/// True iff the super-nilindex equals (n, m) for dims (n+1 | m).
bool is_filiform(const SuperAlgebra& a);

/// [X_0,X_i]=X_{i+1} (i<n), [X_0,X_n]=0, [X_0,Y_t]=Y_{t+1} (t<m),
/// [X_0,Y_m]=0, and [X_1,X_2] supported in X_4..X_n.
bool verify_adapted_basis(const SuperAlgebra& a);

/// (p+1)^2 (p/2) + 2 (p+1) q^2, evaluated exactly. Throws std::logic_error
/// if the expression were not an integer.
long long variety_embedding_dim(long long p, long long q);

/// Group action of GL(V0) x GL(V1): new law (g.mu)(x,y) = g mu(g^-1 x, g^-1 y).
/// g_even is (n+1)x(n+1), g_odd is m x m; both must be invertible.
SuperAlgebra apply_basis_change(const SuperAlgebra& a, const RationalMatrix& g_even,
                                const RationalMatrix& g_odd);

}  // namespace filiform
