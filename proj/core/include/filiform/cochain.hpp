#pragma once

#include "filiform/superalgebra.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace filiform {

/// Even 1-cochain: X_i -> even vector, Y_t -> odd vector.
struct Cochain1 {
    std::map<int, SparseVec> even_part;  // i in [0,n] -> even values
    std::map<int, SparseVec> odd_part;   // t in [1,m] -> odd values

    bool is_zero() const { return even_part.empty() && odd_part.empty(); }
    void set_even(int i, SparseVec v);
    void set_odd(int t, SparseVec v);
    SparseVec even_at(int i) const;
    SparseVec odd_at(int t) const;
};

/// Even 2-cochain with its three homogeneous components:
///   psi : G0 ^ G0 -> G0   (antisymmetric keys i<j, even values)
///   rho : G0 (x) G1 -> G1 (keys (i,t), odd values)
///   b   : G1 v G1 -> G0   (symmetric keys t<=r, even values)
/// Parity of the values is enforced by the storage itself.
class Cochain2 {
public:
    std::map<std::pair<int, int>, SparseVec> psi;
    std::map<std::pair<int, int>, SparseVec> rho;
    std::map<std::pair<int, int>, SparseVec> b;

    bool is_zero() const { return psi.empty() && rho.empty() && b.empty(); }
    bool pure_psi() const { return rho.empty() && b.empty(); }
    bool pure_rho() const { return psi.empty() && b.empty(); }
    bool pure_b() const { return psi.empty() && rho.empty(); }

    /// Writers canonicalize the key (sign flip for psi, sort for b) and drop
    /// zero entries.
    void add_psi(int i, int j, int target, const Rational& c);
    void add_rho(int i, int t, int target, const Rational& c);
    void add_b(int t, int r, int target, const Rational& c);
    void set_psi(int i, int j, SparseVec v);
    void set_rho(int i, int t, SparseVec v);
    void set_b(int t, int r, SparseVec v);

    /// Component evaluation with the built-in symmetries.
    SparseVec psi_at(int i, int j) const;
    SparseVec rho_at(int i, int t) const;
    SparseVec b_at(int t, int r) const;

    /// Graded-bilinear evaluation on arbitrary vectors: the cochain is the
    /// even bilinear map psi + rho + b with rho(odd,even) = -rho(even,odd).
    SuperVector eval(const SuperVector& x, const SuperVector& y) const;

    Cochain2& operator+=(const Cochain2& o);
    Cochain2& operator*=(const Rational& c);
    friend Cochain2 operator+(Cochain2 a, const Cochain2& b) { return a += b; }
    friend Cochain2 operator*(const Rational& c, Cochain2 v) { return v *= c; }
    bool operator==(const Cochain2&) const = default;
};

/// Even 3-cochain, the codomain of the degree-2 differential. Components by
/// bidegree (even args, odd args); value parity follows the even grading.
struct Cochain3 {
    std::map<std::tuple<int, int, int>, SparseVec> c30;              // i<j<k, even vals
    std::map<std::tuple<int, int, int>, SparseVec> c21;              // (i<j, t), odd vals
    std::map<std::tuple<int, int, int>, SparseVec> c12;              // (i, t<=r), even vals
    std::map<std::tuple<int, int, int>, SparseVec> c03;              // t<=r<=u, odd vals

    bool is_zero() const {
        return c30.empty() && c21.empty() && c12.empty() && c03.empty();
    }
    void add30(int i, int j, int k, int target, const Rational& c);
    void add21(int i, int j, int t, int target, const Rational& c);
    void add12(int i, int t, int r, int target, const Rational& c);
    void add03(int t, int r, int u, int target, const Rational& c);
    /// Human-readable location of some nonzero entry, for diagnostics.
    std::string first_nonzero() const;
};

/// Fixed coordinate ordering of even 2-cochains over dims (n+1 | m):
/// all psi coordinates (keys (i,j) lexicographic, then target), then rho,
/// then b.
class Cochain2Layout {
public:
    Cochain2Layout(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    int total() const { return b_offset_ + b_dim_; }
    int psi_offset() const { return 0; }
    int rho_offset() const { return rho_offset_; }
    int b_offset() const { return b_offset_; }
    int psi_dim() const { return rho_offset_; }
    int rho_dim() const { return b_offset_ - rho_offset_; }
    int b_dim() const { return b_dim_; }

    int psi_index(int i, int j, int target) const;
    int rho_index(int i, int t, int target) const;
    int b_index(int t, int r, int target) const;

    SparseVec encode(const Cochain2& c) const;
    Cochain2 decode(const SparseVec& coords) const;

private:
    int n_, m_;
    int rho_offset_, b_offset_, b_dim_;
};

/// Fixed coordinate ordering of the degree-3 target space: bidegree blocks
/// (3,0), (2,1), (1,2), (0,3), keys lexicographic within each block.
class Cochain3Layout {
public:
    Cochain3Layout(int n, int m);

    int total() const { return total_; }
    int row30(int i, int j, int k, int target) const;
    int row21(int i, int j, int t, int target) const;
    int row12(int i, int t, int r, int target) const;
    int row03(int t, int r, int u, int target) const;

    SparseVec encode(const Cochain3& c) const;

    /// Canonical key enumerations (used for matrix assembly and reporting).
    std::vector<std::tuple<int, int, int>> keys30() const;
    std::vector<std::tuple<int, int, int>> keys21() const;
    std::vector<std::tuple<int, int, int>> keys12() const;
    std::vector<std::tuple<int, int, int>> keys03() const;

private:
    int n_, m_;
    int off21_, off12_, off03_, total_;
    int ord30(int i, int j, int k) const;
    int ord21(int i, int j, int t) const;
    int ord12(int i, int t, int r) const;
    int ord03(int t, int r, int u) const;
};

}  // namespace filiform
