#include "filiform/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace filiform {

void add_scaled(SparseVec& dst, const SparseVec& src, const Rational& c) {
    if (c == 0)
        return;
    for (const auto& [k, v] : src) {
        auto it = dst.find(k);
        if (it == dst.end()) {
            dst.emplace(k, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0)
                dst.erase(it);
        }
    }
}

bool is_zero(const SparseVec& v) {
    return v.empty();
}

SparseVec scaled(const SparseVec& v, const Rational& c) {
    SparseVec out;
    if (c == 0)
        return out;
    for (const auto& [k, val] : v)
        out.emplace_hint(out.end(), k, c * val);
    return out;
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix: negative shape");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.data_[i].emplace_back(i, Rational(1));
    return m;
}

std::size_t RationalMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : data_)
        total += r.size();
    return total;
}

void RationalMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix: index out of range");
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

void RationalMatrix::add(int r, int c, const Rational& v) {
    if (v == 0)
        return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix: index out of range");
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0)
            row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

Rational RationalMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix: index out of range");
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        return it->second;
    return Rational(0);
}

void RationalMatrix::set_row(int r, Row row) {
    if (r < 0 || r >= rows_)
        throw std::out_of_range("matrix: row out of range");
    data_[r] = std::move(row);
}

void RationalMatrix::append_row(Row row) {
    data_.push_back(std::move(row));
    ++rows_;
}

void RationalMatrix::append_row(const SparseVec& row) {
    Row r;
    r.reserve(row.size());
    for (const auto& [c, v] : row) {
        if (c < 0 || c >= cols_)
            throw std::out_of_range("matrix: column out of range");
        r.emplace_back(c, v);
    }
    append_row(std::move(r));
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix: vector length mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, val] : data_[r])
            out[r] += val * v[c];
    return out;
}

SparseVec RationalMatrix::apply_sparse(const SparseVec& v) const {
    SparseVec out;
    for (int r = 0; r < rows_; ++r) {
        Rational acc(0);
        for (const auto& [c, val] : data_[r]) {
            auto it = v.find(c);
            if (it != v.end())
                acc += val * it->second;
        }
        if (acc != 0)
            out.emplace_hint(out.end(), r, acc);
    }
    return out;
}

RationalMatrix RationalMatrix::multiplied_by(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix: shape mismatch in product");
    RationalMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        SparseVec acc;
        for (const auto& [k, val] : data_[r])
            for (const auto& [c, v2] : rhs.data_[k])
                add_scaled_entry(acc, c, val * v2);
        Row row;
        row.reserve(acc.size());
        for (auto& [c, v] : acc)
            row.emplace_back(c, v);
        out.data_[r] = std::move(row);
    }
    return out;
}

namespace {

// row destination += c * source, both sorted sparse rows
RationalMatrix::Row merge_axpy(const RationalMatrix::Row& dst,
                               const RationalMatrix::Row& src, const Rational& c) {
    RationalMatrix::Row out;
    out.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() && b != src.end()) {
        if (a->first < b->first) {
            out.push_back(*a++);
        } else if (b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rational v = a->second + c * b->second;
            if (v != 0)
                out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, dst.end());
    for (; b != src.end(); ++b)
        out.emplace_back(b->first, c * b->second);
    return out;
}

}  // namespace

void add_scaled_entry(SparseVec& dst, int key, const Rational& v) {
    if (v == 0)
        return;
    auto it = dst.find(key);
    if (it == dst.end()) {
        dst.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0)
            dst.erase(it);
    }
}

RrefResult rref(RationalMatrix m) {
    const int nrows = m.rows();
    auto& rows = m.data_;
    std::vector<int> pivots;
    int done = 0;
    while (true) {
        // Pivot: the first remaining row whose leading column is minimal.
        int best_row = -1;
        int best_col = m.cols();
        for (int r = done; r < nrows; ++r) {
            if (rows[r].empty())
                continue;
            int lead = rows[r].front().first;
            if (lead < best_col) {
                best_col = lead;
                best_row = r;
            }
        }
        if (best_row < 0)
            break;
        std::swap(rows[done], rows[best_row]);
        auto& prow = rows[done];
        if (prow.front().second != 1) {
            Rational inv = 1 / prow.front().second;
            for (auto& [c, v] : prow)
                v *= inv;
        }
        for (int r = 0; r < nrows; ++r) {
            if (r == done || rows[r].empty())
                continue;
            const auto& row = rows[r];
            auto it = std::lower_bound(row.begin(), row.end(), best_col,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != row.end() && it->first == best_col)
                rows[r] = merge_axpy(row, prow, -it->second);
        }
        pivots.push_back(best_col);
        ++done;
    }
    return RrefResult{std::move(m), std::move(pivots)};
}

int rank(const RationalMatrix& m) {
    return rref(m).rank();
}

namespace {

std::vector<SparseVec> kernel_from_rref(const RrefResult& r, int cols) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : r.pivots)
        is_pivot[p] = true;
    std::vector<SparseVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        SparseVec v;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            const auto& row = r.matrix.row(static_cast<int>(i));
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != row.end() && it->first == f)
                v[r.pivots[i]] = -it->second;
        }
        v[f] = Rational(1);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<SparseVec> kernel_basis(const RationalMatrix& m) {
    return kernel_from_rref(rref(m), m.cols());
}

KernelResult kernel_with_info(const RationalMatrix& m) {
    RrefResult red = rref(m);
    KernelResult out;
    out.pivots = red.pivots;
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : red.pivots)
        is_pivot[p] = true;
    for (int f = 0; f < m.cols(); ++f)
        if (!is_pivot[f])
            out.free_columns.push_back(f);
    out.basis = kernel_from_rref(red, m.cols());
    return out;
}

std::optional<AffineSolution> solve_affine(const RationalMatrix& m,
                                           const std::vector<Rational>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw std::invalid_argument("solve_affine: rhs length mismatch");
    const int cols = m.cols();
    RationalMatrix aug(m.rows(), cols + 1);
    for (int r = 0; r < m.rows(); ++r) {
        RationalMatrix::Row row = m.row(r);
        if (rhs[r] != 0)
            row.emplace_back(cols, rhs[r]);
        aug.set_row(r, std::move(row));
    }
    RrefResult red = rref(std::move(aug));
    for (int p : red.pivots)
        if (p == cols)
            return std::nullopt;
    AffineSolution sol;
    sol.particular.assign(static_cast<std::size_t>(cols), Rational(0));
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        const auto& row = red.matrix.row(static_cast<int>(i));
        if (!row.empty() && row.back().first == cols)
            sol.particular[red.pivots[i]] = row.back().second;
    }
    // The first `cols` columns of the reduced augmented matrix are rref(m),
    // since the system is consistent.
    RrefResult base;
    base.pivots = red.pivots;
    base.matrix = RationalMatrix(m.rows(), cols);
    for (int r = 0; r < m.rows(); ++r) {
        RationalMatrix::Row row = red.matrix.row(r);
        if (!row.empty() && row.back().first == cols)
            row.pop_back();
        base.matrix.set_row(r, std::move(row));
    }
    sol.homogeneous = kernel_from_rref(base, cols);
    return sol;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        RationalMatrix::Row row = m.row(r);
        row.emplace_back(n + r, Rational(1));
        aug.set_row(r, std::move(row));
    }
    RrefResult red = rref(std::move(aug));
    if (red.rank() < n || red.pivots[static_cast<std::size_t>(n) - 1] >= n)
        return std::nullopt;
    RationalMatrix inv(n, n);
    for (int r = 0; r < n; ++r) {
        RationalMatrix::Row row;
        for (const auto& [c, v] : red.matrix.row(r))
            if (c >= n)
                row.emplace_back(c - n, v);
        inv.set_row(r, std::move(row));
    }
    return inv;
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RationalMatrix(0, ambient);
    return s;
}

Subspace Subspace::span(int ambient, const std::vector<SparseVec>& vectors) {
    RationalMatrix m(0, ambient);
    for (const auto& v : vectors)
        m.append_row(v);
    RrefResult red = rref(std::move(m));
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RationalMatrix(0, ambient);
    for (int r = 0; r < red.rank(); ++r)
        s.basis_.append_row(red.matrix.row(r));
    return s;
}

bool Subspace::contains(const SparseVec& v) const {
    SparseVec residue = v;
    for (int r = 0; r < basis_.rows(); ++r) {
        const auto& row = basis_.row(r);
        int pivot = row.front().first;
        auto it = residue.find(pivot);
        if (it == residue.end())
            continue;
        Rational c = -it->second;
        SparseVec row_vec;
        for (const auto& [col, val] : row)
            row_vec.emplace_hint(row_vec.end(), col, val);
        add_scaled(residue, row_vec, c);
    }
    return residue.empty();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_vectors())
        if (!contains(v))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<SparseVec> all = basis_vectors();
    for (auto& v : other.basis_vectors())
        all.push_back(std::move(v));
    return span(ambient_, all);
}

std::vector<SparseVec> Subspace::basis_vectors() const {
    std::vector<SparseVec> out;
    out.reserve(static_cast<std::size_t>(basis_.rows()));
    for (int r = 0; r < basis_.rows(); ++r) {
        SparseVec v;
        for (const auto& [c, val] : basis_.row(r))
            v.emplace_hint(v.end(), c, val);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace filiform
