#include "filiform/cochain.hpp"

#include <stdexcept>

namespace filiform {

void Cochain1::set_even(int i, SparseVec v) {
    if (v.empty())
        even_part.erase(i);
    else
        even_part[i] = std::move(v);
}

void Cochain1::set_odd(int t, SparseVec v) {
    if (v.empty())
        odd_part.erase(t);
    else
        odd_part[t] = std::move(v);
}

SparseVec Cochain1::even_at(int i) const {
    auto it = even_part.find(i);
    return it == even_part.end() ? SparseVec{} : it->second;
}

SparseVec Cochain1::odd_at(int t) const {
    auto it = odd_part.find(t);
    return it == odd_part.end() ? SparseVec{} : it->second;
}

void Cochain2::add_psi(int i, int j, int target, const Rational& c) {
    if (i == j || c == 0)
        return;
    Rational v = c;
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    auto& vec = psi[{i, j}];
    add_scaled_entry(vec, target, v);
    if (vec.empty())
        psi.erase({i, j});
}

void Cochain2::add_rho(int i, int t, int target, const Rational& c) {
    if (c == 0)
        return;
    auto& vec = rho[{i, t}];
    add_scaled_entry(vec, target, c);
    if (vec.empty())
        rho.erase({i, t});
}

void Cochain2::add_b(int t, int r, int target, const Rational& c) {
    if (c == 0)
        return;
    if (t > r)
        std::swap(t, r);
    auto& vec = b[{t, r}];
    add_scaled_entry(vec, target, c);
    if (vec.empty())
        b.erase({t, r});
}

void Cochain2::set_psi(int i, int j, SparseVec v) {
    if (i >= j)
        throw std::invalid_argument("cochain: psi key requires i<j");
    if (v.empty())
        psi.erase({i, j});
    else
        psi[{i, j}] = std::move(v);
}

void Cochain2::set_rho(int i, int t, SparseVec v) {
    if (v.empty())
        rho.erase({i, t});
    else
        rho[{i, t}] = std::move(v);
}

void Cochain2::set_b(int t, int r, SparseVec v) {
    if (t > r)
        throw std::invalid_argument("cochain: b key requires t<=r");
    if (v.empty())
        b.erase({t, r});
    else
        b[{t, r}] = std::move(v);
}

SparseVec Cochain2::psi_at(int i, int j) const {
    if (i == j)
        return {};
    bool flip = i > j;
    auto it = psi.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == psi.end())
        return {};
    return flip ? scaled(it->second, Rational(-1)) : it->second;
}

SparseVec Cochain2::rho_at(int i, int t) const {
    auto it = rho.find({i, t});
    return it == rho.end() ? SparseVec{} : it->second;
}

SparseVec Cochain2::b_at(int t, int r) const {
    auto it = b.find(t <= r ? std::make_pair(t, r) : std::make_pair(r, t));
    return it == b.end() ? SparseVec{} : it->second;
}

SuperVector Cochain2::eval(const SuperVector& x, const SuperVector& y) const {
    SuperVector out;
    for (const auto& [e, a] : x.coefficients())
        for (const auto& [f, bb] : y.coefficients()) {
            Rational c = a * bb;
            if (e.parity == Parity::even && f.parity == Parity::even) {
                for (const auto& [k, v] : psi_at(e.index, f.index))
                    out.add(BasisElement{Parity::even, k}, c * v);
            } else if (e.parity == Parity::even && f.parity == Parity::odd) {
                for (const auto& [k, v] : rho_at(e.index, f.index))
                    out.add(BasisElement{Parity::odd, k}, c * v);
            } else if (e.parity == Parity::odd && f.parity == Parity::even) {
                for (const auto& [k, v] : rho_at(f.index, e.index))
                    out.add(BasisElement{Parity::odd, k}, -c * v);
            } else {
                for (const auto& [k, v] : b_at(e.index, f.index))
                    out.add(BasisElement{Parity::even, k}, c * v);
            }
        }
    return out;
}

Cochain2& Cochain2::operator+=(const Cochain2& o) {
    for (const auto& [key, v] : o.psi)
        for (const auto& [k, c] : v)
            add_psi(key.first, key.second, k, c);
    for (const auto& [key, v] : o.rho)
        for (const auto& [k, c] : v)
            add_rho(key.first, key.second, k, c);
    for (const auto& [key, v] : o.b)
        for (const auto& [k, c] : v)
            add_b(key.first, key.second, k, c);
    return *this;
}

Cochain2& Cochain2::operator*=(const Rational& c) {
    if (c == 0) {
        psi.clear();
        rho.clear();
        b.clear();
        return *this;
    }
    for (auto& [key, v] : psi)
        for (auto& [k, val] : v)
            val *= c;
    for (auto& [key, v] : rho)
        for (auto& [k, val] : v)
            val *= c;
    for (auto& [key, v] : b)
        for (auto& [k, val] : v)
            val *= c;
    return *this;
}

namespace {

void add_entry3(std::map<std::tuple<int, int, int>, SparseVec>& m,
                std::tuple<int, int, int> key, int target, const Rational& c) {
    if (c == 0)
        return;
    auto& vec = m[key];
    add_scaled_entry(vec, target, c);
    if (vec.empty())
        m.erase(key);
}

}  // namespace

void Cochain3::add30(int i, int j, int k, int target, const Rational& c) {
    add_entry3(c30, {i, j, k}, target, c);
}
void Cochain3::add21(int i, int j, int t, int target, const Rational& c) {
    add_entry3(c21, {i, j, t}, target, c);
}
void Cochain3::add12(int i, int t, int r, int target, const Rational& c) {
    add_entry3(c12, {i, t, r}, target, c);
}
void Cochain3::add03(int t, int r, int u, int target, const Rational& c) {
    add_entry3(c03, {t, r, u}, target, c);
}

std::string Cochain3::first_nonzero() const {
    auto fmt = [](const char* tag, const std::tuple<int, int, int>& key,
                  const SparseVec& v) {
        auto [a, b, c] = key;
        return std::string(tag) + "(" + std::to_string(a) + "," + std::to_string(b) +
               "," + std::to_string(c) + ") -> index " +
               std::to_string(v.begin()->first) + " value " +
               rat_to_string(v.begin()->second);
    };
    if (!c30.empty())
        return fmt("(X,X,X)", c30.begin()->first, c30.begin()->second);
    if (!c21.empty())
        return fmt("(X,X,Y)", c21.begin()->first, c21.begin()->second);
    if (!c12.empty())
        return fmt("(X,Y,Y)", c12.begin()->first, c12.begin()->second);
    if (!c03.empty())
        return fmt("(Y,Y,Y)", c03.begin()->first, c03.begin()->second);
    return "zero";
}

Cochain2Layout::Cochain2Layout(int n, int m) : n_(n), m_(m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("layout: negative dimensions");
    int psi_pairs = (n + 1) * n / 2;
    rho_offset_ = psi_pairs * (n + 1);
    int rho_keys = (n + 1) * m;
    b_offset_ = rho_offset_ + rho_keys * m;
    int b_pairs = m * (m + 1) / 2;
    b_dim_ = b_pairs * (n + 1);
}

namespace {

inline int pair_ord_strict(int i, int j, int n) {
    // rank of (i<j) pairs over [0,n], lexicographic
    return i * n - i * (i - 1) / 2 + (j - i - 1);
}

inline int pair_ord_sym(int t, int r, int m) {
    // rank of (t<=r) pairs over [1,m], lexicographic
    return (t - 1) * m - (t - 1) * (t - 2) / 2 + (r - t);
}

}  // namespace

int Cochain2Layout::psi_index(int i, int j, int target) const {
    if (!(0 <= i && i < j && j <= n_) || target < 0 || target > n_)
        throw std::out_of_range("layout: psi index");
    return pair_ord_strict(i, j, n_) * (n_ + 1) + target;
}

int Cochain2Layout::rho_index(int i, int t, int target) const {
    if (!(0 <= i && i <= n_ && 1 <= t && t <= m_) || target < 1 || target > m_)
        throw std::out_of_range("layout: rho index");
    return rho_offset_ + (i * m_ + (t - 1)) * m_ + (target - 1);
}

int Cochain2Layout::b_index(int t, int r, int target) const {
    if (!(1 <= t && t <= r && r <= m_) || target < 0 || target > n_)
        throw std::out_of_range("layout: b index");
    return b_offset_ + pair_ord_sym(t, r, m_) * (n_ + 1) + target;
}

SparseVec Cochain2Layout::encode(const Cochain2& c) const {
    SparseVec out;
    for (const auto& [key, v] : c.psi)
        for (const auto& [k, val] : v)
            out[psi_index(key.first, key.second, k)] = val;
    for (const auto& [key, v] : c.rho)
        for (const auto& [k, val] : v)
            out[rho_index(key.first, key.second, k)] = val;
    for (const auto& [key, v] : c.b)
        for (const auto& [k, val] : v)
            out[b_index(key.first, key.second, k)] = val;
    return out;
}

Cochain2 Cochain2Layout::decode(const SparseVec& coords) const {
    Cochain2 c;
    for (const auto& [idx, val] : coords) {
        if (idx < 0 || idx >= total())
            throw std::out_of_range("layout: coordinate out of range");
        if (idx < rho_offset_) {
            int ord = idx / (n_ + 1);
            int target = idx % (n_ + 1);
            // invert pair_ord_strict
            int i = 0;
            int rem = ord;
            while (rem >= n_ - i) {
                rem -= n_ - i;
                ++i;
            }
            int j = i + 1 + rem;
            c.add_psi(i, j, target, val);
        } else if (idx < b_offset_) {
            int rel = idx - rho_offset_;
            int target = rel % m_ + 1;
            int ord = rel / m_;
            int i = ord / m_;
            int t = ord % m_ + 1;
            c.add_rho(i, t, target, val);
        } else {
            int rel = idx - b_offset_;
            int target = rel % (n_ + 1);
            int ord = rel / (n_ + 1);
            int t = 1;
            int rem = ord;
            while (rem >= m_ - t + 1) {
                rem -= m_ - t + 1;
                ++t;
            }
            int r = t + rem;
            c.add_b(t, r, target, val);
        }
    }
    return c;
}

Cochain3Layout::Cochain3Layout(int n, int m) : n_(n), m_(m) {
    int n30 = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                ++n30;
    int pairs = (n + 1) * n / 2;
    int sym = m * (m + 1) / 2;
    int n03 = 0;
    for (int t = 1; t <= m; ++t)
        for (int r = t; r <= m; ++r)
            for (int u = r; u <= m; ++u)
                ++n03;
    off21_ = n30 * (n + 1);
    off12_ = off21_ + pairs * m * m;
    off03_ = off12_ + (n + 1) * sym * (n + 1);
    total_ = off03_ + n03 * m;
}

int Cochain3Layout::ord30(int i, int j, int k) const {
    int ord = 0;
    for (int a = 0; a < i; ++a)
        ord += (n_ - a) * (n_ - a - 1) / 2;
    ord += pair_ord_strict(j - i - 1, k - i - 1, n_ - i - 1) +
           0;  // pairs (j,k) within (i, n]
    return ord;
}

int Cochain3Layout::ord21(int i, int j, int t) const {
    return pair_ord_strict(i, j, n_) * m_ + (t - 1);
}

int Cochain3Layout::ord12(int i, int t, int r) const {
    return i * (m_ * (m_ + 1) / 2) + pair_ord_sym(t, r, m_);
}

int Cochain3Layout::ord03(int t, int r, int u) const {
    // rank of non-decreasing triples over [1,m]
    int ord = 0;
    for (int a = 1; a < t; ++a)
        ord += (m_ - a + 1) * (m_ - a + 2) / 2;
    ord += pair_ord_sym(r - t + 1, u - t + 1, m_ - t + 1);
    return ord;
}

int Cochain3Layout::row30(int i, int j, int k, int target) const {
    return ord30(i, j, k) * (n_ + 1) + target;
}
int Cochain3Layout::row21(int i, int j, int t, int target) const {
    return off21_ + ord21(i, j, t) * m_ + (target - 1);
}
int Cochain3Layout::row12(int i, int t, int r, int target) const {
    return off12_ + ord12(i, t, r) * (n_ + 1) + target;
}
int Cochain3Layout::row03(int t, int r, int u, int target) const {
    return off03_ + ord03(t, r, u) * m_ + (target - 1);
}

SparseVec Cochain3Layout::encode(const Cochain3& c) const {
    SparseVec out;
    for (const auto& [key, v] : c.c30)
        for (const auto& [k, val] : v)
            out[row30(std::get<0>(key), std::get<1>(key), std::get<2>(key), k)] = val;
    for (const auto& [key, v] : c.c21)
        for (const auto& [k, val] : v)
            out[row21(std::get<0>(key), std::get<1>(key), std::get<2>(key), k)] = val;
    for (const auto& [key, v] : c.c12)
        for (const auto& [k, val] : v)
            out[row12(std::get<0>(key), std::get<1>(key), std::get<2>(key), k)] = val;
    for (const auto& [key, v] : c.c03)
        for (const auto& [k, val] : v)
            out[row03(std::get<0>(key), std::get<1>(key), std::get<2>(key), k)] = val;
    return out;
}

std::vector<std::tuple<int, int, int>> Cochain3Layout::keys30() const {
    std::vector<std::tuple<int, int, int>> keys;
    for (int i = 0; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            for (int k = j + 1; k <= n_; ++k)
                keys.emplace_back(i, j, k);
    return keys;
}

std::vector<std::tuple<int, int, int>> Cochain3Layout::keys21() const {
    std::vector<std::tuple<int, int, int>> keys;
    for (int i = 0; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            for (int t = 1; t <= m_; ++t)
                keys.emplace_back(i, j, t);
    return keys;
}

std::vector<std::tuple<int, int, int>> Cochain3Layout::keys12() const {
    std::vector<std::tuple<int, int, int>> keys;
    for (int i = 0; i <= n_; ++i)
        for (int t = 1; t <= m_; ++t)
            for (int r = t; r <= m_; ++r)
                keys.emplace_back(i, t, r);
    return keys;
}

std::vector<std::tuple<int, int, int>> Cochain3Layout::keys03() const {
    std::vector<std::tuple<int, int, int>> keys;
    for (int t = 1; t <= m_; ++t)
        for (int r = t; r <= m_; ++r)
            for (int u = r; u <= m_; ++u)
                keys.emplace_back(t, r, u);
    return keys;
}

}  // namespace filiform
