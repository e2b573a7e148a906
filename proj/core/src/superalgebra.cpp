#include "filiform/superalgebra.hpp"

#include <cctype>
#include <stdexcept>

namespace filiform {

std::string to_string(const BasisElement& e) {
    return (e.parity == Parity::even ? "X" : "Y") + std::to_string(e.index);
}

BasisElement basis_element_from_string(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'X' && s[0] != 'Y'))
        throw std::invalid_argument("basis element: malformed '" + s + "'");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("basis element: malformed '" + s + "'");
    return BasisElement{s[0] == 'X' ? Parity::even : Parity::odd, std::stoi(s.substr(1))};
}

SuperVector SuperVector::unit(BasisElement e) {
    SuperVector v;
    v.c_.emplace(e, Rational(1));
    return v;
}

SuperVector SuperVector::from_parts(const SparseVec& even, const SparseVec& odd) {
    SuperVector v;
    for (const auto& [i, c] : even)
        v.c_.emplace(BasisElement{Parity::even, i}, c);
    for (const auto& [t, c] : odd)
        v.c_.emplace(BasisElement{Parity::odd, t}, c);
    return v;
}

void SuperVector::add(BasisElement e, const Rational& c) {
    if (c == 0)
        return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            c_.erase(it);
    }
}

Rational SuperVector::coefficient(BasisElement e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
}

bool SuperVector::is_homogeneous(Parity p) const {
    for (const auto& [e, c] : c_)
        if (e.parity != p)
            return false;
    return true;
}

SparseVec SuperVector::even_part() const {
    SparseVec out;
    for (const auto& [e, c] : c_)
        if (e.parity == Parity::even)
            out.emplace_hint(out.end(), e.index, c);
    return out;
}

SparseVec SuperVector::odd_part() const {
    SparseVec out;
    for (const auto& [e, c] : c_)
        if (e.parity == Parity::odd)
            out.emplace_hint(out.end(), e.index, c);
    return out;
}

SuperVector& SuperVector::operator+=(const SuperVector& o) {
    for (const auto& [e, c] : o.c_)
        add(e, c);
    return *this;
}

SuperVector& SuperVector::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [e, v] : c_)
        v *= c;
    return *this;
}

std::string SuperVector::to_string() const {
    if (c_.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : c_) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += rat_to_string(c) + "*";
        out += filiform::to_string(e);
    }
    return out;
}

namespace {

void validate_target(const SparseVec& v, int lo, int hi, const char* what) {
    for (const auto& [k, c] : v) {
        if (k < lo || k > hi)
            throw std::out_of_range(std::string("superalgebra: ") + what +
                                    " target index out of range");
        if (c == 0)
            throw std::invalid_argument(std::string("superalgebra: ") + what +
                                        " stores a zero entry");
    }
}

}  // namespace

SuperAlgebra::SuperAlgebra(int n, int m, StructureConstants sc)
    : n_(n), m_(m), sc_(std::move(sc)) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("superalgebra: negative dimensions");
    for (const auto& [key, v] : sc_.C) {
        auto [i, j] = key;
        if (!(0 <= i && i < j && j <= n))
            throw std::out_of_range("superalgebra: C key out of range");
        validate_target(v, 0, n, "C");
    }
    for (const auto& [key, v] : sc_.D) {
        auto [i, t] = key;
        if (!(0 <= i && i <= n && 1 <= t && t <= m))
            throw std::out_of_range("superalgebra: D key out of range");
        validate_target(v, 1, m, "D");
    }
    for (const auto& [key, v] : sc_.E) {
        auto [t, r] = key;
        if (!(1 <= t && t <= r && r <= m))
            throw std::out_of_range("superalgebra: E key out of range");
        validate_target(v, 0, n, "E");
    }
}

SparseVec SuperAlgebra::bracket_ee(int i, int j) const {
    if (i < 0 || i > n_ || j < 0 || j > n_)
        throw std::out_of_range("bracket: even index out of range");
    if (i == j)
        return {};
    bool flip = i > j;
    auto it = sc_.C.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == sc_.C.end())
        return {};
    return flip ? scaled(it->second, Rational(-1)) : it->second;
}

SparseVec SuperAlgebra::bracket_eo(int i, int t) const {
    if (i < 0 || i > n_ || t < 1 || t > m_)
        throw std::out_of_range("bracket: mixed index out of range");
    auto it = sc_.D.find({i, t});
    return it == sc_.D.end() ? SparseVec{} : it->second;
}

SparseVec SuperAlgebra::bracket_oo(int t, int r) const {
    if (t < 1 || t > m_ || r < 1 || r > m_)
        throw std::out_of_range("bracket: odd index out of range");
    auto it = sc_.E.find(t <= r ? std::make_pair(t, r) : std::make_pair(r, t));
    return it == sc_.E.end() ? SparseVec{} : it->second;
}

SuperVector SuperAlgebra::bracket(BasisElement x, BasisElement y) const {
    if (x.parity == Parity::even && y.parity == Parity::even)
        return SuperVector::from_parts(bracket_ee(x.index, y.index), {});
    if (x.parity == Parity::even && y.parity == Parity::odd)
        return SuperVector::from_parts({}, bracket_eo(x.index, y.index));
    if (x.parity == Parity::odd && y.parity == Parity::even)
        return SuperVector::from_parts({}, scaled(bracket_eo(y.index, x.index), Rational(-1)));
    return SuperVector::from_parts(bracket_oo(x.index, y.index), {});
}

SuperVector SuperAlgebra::bracket(const SuperVector& x, const SuperVector& y) const {
    SuperVector out;
    for (const auto& [e, a] : x.coefficients())
        for (const auto& [f, b] : y.coefficients()) {
            SuperVector term = bracket(e, f);
            term *= a * b;
            out += term;
        }
    return out;
}

SuperAlgebra lnm(int n, int m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("lnm: negative dimensions");
    StructureConstants sc;
    for (int i = 1; i < n; ++i)
        sc.C[{0, i}] = SparseVec{{i + 1, Rational(1)}};
    for (int t = 1; t < m; ++t)
        sc.D[{0, t}] = SparseVec{{t + 1, Rational(1)}};
    return SuperAlgebra(n, m, std::move(sc));
}

SuperAlgebra abelian_superalgebra(int n, int m) {
    return SuperAlgebra(n, m, StructureConstants{});
}

namespace {

int parity_sign(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

// (-1)^{ga.gc} [A,[B,C]] + (-1)^{ga.gb} [B,[C,A]] + (-1)^{gb.gc} [C,[A,B]]
SuperVector jacobi_sum(const SuperAlgebra& alg, BasisElement a, BasisElement b,
                       BasisElement c) {
    SuperVector va = SuperVector::unit(a);
    SuperVector vb = SuperVector::unit(b);
    SuperVector vc = SuperVector::unit(c);
    SuperVector out;
    SuperVector t1 = alg.bracket(va, alg.bracket(vb, vc));
    t1 *= Rational(parity_sign(c.parity, a.parity));
    SuperVector t2 = alg.bracket(vb, alg.bracket(vc, va));
    t2 *= Rational(parity_sign(a.parity, b.parity));
    SuperVector t3 = alg.bracket(vc, alg.bracket(va, vb));
    t3 *= Rational(parity_sign(b.parity, c.parity));
    out += t1;
    out += t2;
    out += t3;
    return out;
}

}  // namespace

std::vector<JacobiViolation> check_jacobi(const SuperAlgebra& a) {
    std::vector<JacobiViolation> bad;
    const int n = a.n();
    const int m = a.m();
    auto ev = [](int i) { return BasisElement{Parity::even, i}; };
    auto od = [](int t) { return BasisElement{Parity::odd, t}; };
    auto push = [&](BasisElement x, BasisElement y, BasisElement z) {
        SuperVector r = jacobi_sum(a, x, y, z);
        if (!r.is_zero())
            bad.push_back(JacobiViolation{{x, y, z}, std::move(r)});
    };
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                push(ev(i), ev(j), ev(k));
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int t = 1; t <= m; ++t)
                push(ev(i), ev(j), od(t));
    for (int i = 0; i <= n; ++i)
        for (int t = 1; t <= m; ++t)
            for (int r = t; r <= m; ++r)
                push(ev(i), od(t), od(r));
    for (int t = 1; t <= m; ++t)
        for (int r = t; r <= m; ++r)
            for (int u = r; u <= m; ++u)
                push(od(t), od(r), od(u));
    return bad;
}

namespace {

Subspace bracket_span(const SuperAlgebra& a, const Subspace& v, Parity vp) {
    std::vector<SparseVec> products;
    for (const auto& w : v.basis_vectors()) {
        for (int i = 0; i <= a.n(); ++i) {
            SparseVec out;
            for (const auto& [k, c] : w) {
                if (vp == Parity::even)
                    add_scaled(out, a.bracket_ee(i, k), c);
                else
                    add_scaled(out, a.bracket_eo(i, k), c);
            }
            if (!out.empty())
                products.push_back(std::move(out));
        }
    }
    return Subspace::span(v.ambient(), products);
}

}  // namespace

NilData lower_central_series(const SuperAlgebra& a) {
    NilData nd;
    std::vector<SparseVec> full_even;
    for (int i = 0; i <= a.n(); ++i)
        full_even.push_back(SparseVec{{i, Rational(1)}});
    std::vector<SparseVec> full_odd;
    for (int t = 1; t <= a.m(); ++t)
        full_odd.push_back(SparseVec{{t, Rational(1)}});
    // Odd coordinates are 1-based; use index t directly in an (m+1)-dim space
    // so basis vectors keep their labels.
    nd.even_series.push_back(Subspace::span(a.n() + 1, full_even));
    nd.odd_series.push_back(Subspace::span(a.m() + 1, full_odd));

    std::optional<int> p, q;
    while (true) {
        const Subspace& cur = nd.even_series.back();
        if (cur.is_zero()) {
            p = static_cast<int>(nd.even_series.size()) - 1;
            break;
        }
        Subspace next = bracket_span(a, cur, Parity::even);
        if (next == cur)
            break;  // stabilized above zero: not nilpotent
        nd.even_series.push_back(std::move(next));
    }
    while (true) {
        const Subspace& cur = nd.odd_series.back();
        if (cur.is_zero()) {
            q = static_cast<int>(nd.odd_series.size()) - 1;
            break;
        }
        Subspace next = bracket_span(a, cur, Parity::odd);
        if (next == cur)
            break;
        nd.odd_series.push_back(std::move(next));
    }
    if (p && q)
        nd.nilindex = std::make_pair(*p, *q);
    return nd;
}

std::optional<std::pair<int, int>> super_nilindex(const SuperAlgebra& a) {
    return lower_central_series(a).nilindex;
}

bool is_filiform(const SuperAlgebra& a) {
    auto ni = super_nilindex(a);
    return ni && *ni == std::make_pair(a.n(), a.m());
}

bool verify_adapted_basis(const SuperAlgebra& a) {
    const int n = a.n();
    const int m = a.m();
    for (int i = 1; i <= n; ++i) {
        SparseVec expect;
        if (i < n)
            expect[i + 1] = Rational(1);
        if (a.bracket_ee(0, i) != expect)
            return false;
    }
    for (int t = 1; t <= m; ++t) {
        SparseVec expect;
        if (t < m)
            expect[t + 1] = Rational(1);
        if (a.bracket_eo(0, t) != expect)
            return false;
    }
    if (n >= 2)
        for (const auto& [k, c] : a.bracket_ee(1, 2))
            if (k < 4)
                return false;
    return true;
}

long long variety_embedding_dim(long long p, long long q) {
    if (p < 0 || q < 0)
        throw std::invalid_argument("variety_embedding_dim: negative arguments");
    Rational pp(static_cast<long>(p));
    Rational qq(static_cast<long>(q));
    Rational value = (pp + 1) * (pp + 1) * (pp / 2) + 2 * (pp + 1) * qq * qq;
    if (value.get_den() != 1)
        throw std::logic_error("variety_embedding_dim: non-integer value " +
                               rat_to_string(value));
    return static_cast<long long>(value.get_num().get_si());
}

SuperAlgebra apply_basis_change(const SuperAlgebra& a, const RationalMatrix& g_even,
                                const RationalMatrix& g_odd) {
    const int ne = a.dim_even();
    const int no = a.dim_odd();
    if (g_even.rows() != ne || g_even.cols() != ne || g_odd.rows() != no ||
        g_odd.cols() != no)
        throw std::invalid_argument("basis change: shape mismatch");
    auto h_even = inverse(g_even);
    std::optional<RationalMatrix> h_odd;
    if (no > 0)
        h_odd = inverse(g_odd);
    if (!h_even || (no > 0 && !h_odd))
        throw std::invalid_argument("basis change: matrix not invertible");

    // Column j of h = g^{-1} e_j, expressed in the old basis.
    auto even_preimage = [&](int j) {
        SuperVector v;
        for (int r = 0; r < ne; ++r) {
            Rational c = h_even->at(r, j);
            if (c != 0)
                v.add(BasisElement{Parity::even, r}, c);
        }
        return v;
    };
    auto odd_preimage = [&](int t) {
        SuperVector v;
        for (int r = 0; r < no; ++r) {
            Rational c = no > 0 ? h_odd->at(r, t - 1) : Rational(0);
            if (c != 0)
                v.add(BasisElement{Parity::odd, r + 1}, c);
        }
        return v;
    };
    auto push_even = [&](const SparseVec& v) {
        // apply g_even to an even vector
        SparseVec out;
        for (const auto& [k, c] : v)
            for (int r = 0; r < ne; ++r) {
                Rational g = g_even.at(r, k);
                if (g != 0)
                    add_scaled_entry(out, r, g * c);
            }
        return out;
    };
    auto push_odd = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [k, c] : v)
            for (int r = 0; r < no; ++r) {
                Rational g = g_odd.at(r, k - 1);
                if (g != 0)
                    add_scaled_entry(out, r + 1, g * c);
            }
        return out;
    };

    StructureConstants sc;
    for (int i = 0; i <= a.n(); ++i)
        for (int j = i + 1; j <= a.n(); ++j) {
            SuperVector prod = a.bracket(even_preimage(i), even_preimage(j));
            SparseVec v = push_even(prod.even_part());
            if (!v.empty())
                sc.C[{i, j}] = std::move(v);
        }
    for (int i = 0; i <= a.n(); ++i)
        for (int t = 1; t <= a.m(); ++t) {
            SuperVector prod = a.bracket(even_preimage(i), odd_preimage(t));
            SparseVec v = push_odd(prod.odd_part());
            if (!v.empty())
                sc.D[{i, t}] = std::move(v);
        }
    for (int t = 1; t <= a.m(); ++t)
        for (int r = t; r <= a.m(); ++r) {
            SuperVector prod = a.bracket(odd_preimage(t), odd_preimage(r));
            SparseVec v = push_even(prod.even_part());
            if (!v.empty())
                sc.E[{t, r}] = std::move(v);
        }
    return SuperAlgebra(a.n(), a.m(), std::move(sc));
}

}  // namespace filiform
