#pragma once

#include "filiform/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace filiform {

/// Sparse coefficient vector: index -> nonzero value.
using SparseVec = std::map<int, Rational>;

/// dst += c * src, dropping entries that cancel to zero.
void add_scaled(SparseVec& dst, const SparseVec& src, const Rational& c);
/// dst[key] += v, dropping the entry if it cancels.
void add_scaled_entry(SparseVec& dst, int key, const Rational& v);
bool is_zero(const SparseVec& v);
SparseVec scaled(const SparseVec& v, const Rational& c);

struct RrefResult;

/// Sparse matrix over Q, row-major. All stored entries are nonzero and the
/// positions of absent entries read as zero.
class RationalMatrix {
public:
    /// Row entries sorted by column index.
    using Row = std::vector<std::pair<int, Rational>>;

    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nonzeros() const;

    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
    Rational at(int r, int c) const;
    const Row& row(int r) const { return data_[r]; }
    void set_row(int r, Row row);
    void append_row(Row row);
    void append_row(const SparseVec& row);

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    SparseVec apply_sparse(const SparseVec& v) const;
    RationalMatrix multiplied_by(const RationalMatrix& rhs) const;

    bool operator==(const RationalMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Row> data_;

    friend struct RrefResult;
    friend RrefResult rref(RationalMatrix m);
};

struct RrefResult {
    RationalMatrix matrix;        // unique reduced row echelon form, same shape
    std::vector<int> pivots;      // strictly increasing pivot columns
    int rank() const { return static_cast<int>(pivots.size()); }
};

RrefResult rref(RationalMatrix m);
int rank(const RationalMatrix& m);

/// Canonical free-variable kernel basis: one vector per non-pivot column f,
/// in ascending order of f, with entry 1 at f. Deterministic.
std::vector<SparseVec> kernel_basis(const RationalMatrix& m);

struct KernelResult {
    std::vector<SparseVec> basis;
    std::vector<int> free_columns;  // one per basis vector, ascending
    std::vector<int> pivots;        // pivot columns of the matrix
};
KernelResult kernel_with_info(const RationalMatrix& m);

struct AffineSolution {
    std::vector<Rational> particular;     // dense, length cols
    std::vector<SparseVec> homogeneous;   // kernel basis of the matrix
};

/// Full solution set of M x = rhs, or nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const RationalMatrix& m,
                                           const std::vector<Rational>& rhs);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// A subspace of Q^dim held as its rref-canonical row basis, so equality of
/// subspaces is literal equality of the representation.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(int ambient);
    static Subspace span(int ambient, const std::vector<SparseVec>& vectors);

    int ambient() const { return ambient_; }
    int rank() const { return basis_.rows(); }
    bool is_zero() const { return basis_.rows() == 0; }
    bool contains(const SparseVec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    /// rank x ambient, rref rows, no zero rows.
    const RationalMatrix& basis() const { return basis_; }
    std::vector<SparseVec> basis_vectors() const;

    bool operator==(const Subspace&) const = default;

private:
    int ambient_ = 0;
    RationalMatrix basis_;
};

}  // namespace filiform
