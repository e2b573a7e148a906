#pragma once

#include "filiform/cochain.hpp"
#include "filiform/superalgebra.hpp"

#include <cstdint>
#include <initializer_list>

namespace filiform::testing {

inline Rational Q(const std::string& s) { return rat_from_string(s); }

inline SparseVec sv(std::initializer_list<std::pair<int, int>> entries) {
    SparseVec v;
    for (auto [k, c] : entries)
        if (c != 0)
            v[k] = Rational(c);
    return v;
}

/// Deterministic generator (mt19937_64 is fully specified by the standard;
/// no standard distributions are used, so streams are portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational small_rational() {
        int num = uniform(-3, 3);
        int den = uniform(1, 3);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

private:
    std::uint64_t state_;
};

inline Cochain1 random_cochain1(Rng& rng, int n, int m) {
    Cochain1 c;
    for (int i = 0; i <= n; ++i) {
        SparseVec v;
        for (int a = 0; a <= n; ++a)
            if (rng.uniform(0, 2) == 0) {
                Rational q = rng.small_rational();
                if (q != 0)
                    v[a] = q;
            }
        c.set_even(i, std::move(v));
    }
    for (int t = 1; t <= m; ++t) {
        SparseVec v;
        for (int u = 1; u <= m; ++u)
            if (rng.uniform(0, 2) == 0) {
                Rational q = rng.small_rational();
                if (q != 0)
                    v[u] = q;
            }
        c.set_odd(t, std::move(v));
    }
    return c;
}

inline Cochain2 random_cochain2(Rng& rng, int n, int m) {
    Cochain2 c;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int a = 0; a <= n; ++a)
                if (rng.uniform(0, 3) == 0)
                    c.add_psi(i, j, a, rng.small_rational());
    for (int i = 0; i <= n; ++i)
        for (int t = 1; t <= m; ++t)
            for (int u = 1; u <= m; ++u)
                if (rng.uniform(0, 3) == 0)
                    c.add_rho(i, t, u, rng.small_rational());
    for (int t = 1; t <= m; ++t)
        for (int r = t; r <= m; ++r)
            for (int a = 0; a <= n; ++a)
                if (rng.uniform(0, 3) == 0)
                    c.add_b(t, r, a, rng.small_rational());
    return c;
}

inline RationalMatrix random_invertible(Rng& rng, int dim) {
    while (true) {
        RationalMatrix g(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                int num = rng.uniform(-2, 2);
                if (num != 0)
                    g.set(r, c, Rational(num, rng.uniform(1, 2)));
            }
        if (inverse(g))
            return g;
    }
}

}  // namespace filiform::testing
