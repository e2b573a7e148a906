#include "filiform/cohomology.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

namespace filiform {

namespace {

// [X_i, v] for an even vector v
SparseVec ad_ee(const SuperAlgebra& a, int i, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v)
        add_scaled(out, a.bracket_ee(i, k), c);
    return out;
}

// [X_i, v] for an odd vector v
SparseVec ad_eo(const SuperAlgebra& a, int i, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v)
        add_scaled(out, a.bracket_eo(i, k), c);
    return out;
}

// [Y_t, v] for an even vector v; equals -[v, Y_t]
SparseVec ad_oe(const SuperAlgebra& a, int t, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v)
        add_scaled(out, a.bracket_eo(k, t), -c);
    return out;
}

// [Y_t, v] for an odd vector v
SparseVec ad_oo(const SuperAlgebra& a, int t, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v)
        add_scaled(out, a.bracket_oo(t, k), c);
    return out;
}

SparseVec cochain1_even(const Cochain1& c, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, coef] : v)
        add_scaled(out, c.even_at(k), coef);
    return out;
}

SparseVec cochain1_odd(const Cochain1& c, const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, coef] : v)
        add_scaled(out, c.odd_at(k), coef);
    return out;
}

SparseVec psi_app(const Cochain2& c, const SparseVec& v, int j) {
    SparseVec out;
    for (const auto& [a, coef] : v)
        add_scaled(out, c.psi_at(a, j), coef);
    return out;
}

SparseVec rho_app_left(const Cochain2& c, const SparseVec& v, int t) {
    SparseVec out;
    for (const auto& [a, coef] : v)
        add_scaled(out, c.rho_at(a, t), coef);
    return out;
}

SparseVec rho_app_right(const Cochain2& c, int i, const SparseVec& v) {
    SparseVec out;
    for (const auto& [u, coef] : v)
        add_scaled(out, c.rho_at(i, u), coef);
    return out;
}

SparseVec b_app(const Cochain2& c, const SparseVec& v, int r) {
    SparseVec out;
    for (const auto& [u, coef] : v)
        add_scaled(out, c.b_at(u, r), coef);
    return out;
}

}  // namespace

Cochain2 differential1(const SuperAlgebra& a, const Cochain1& c) {
    const int n = a.n();
    const int m = a.m();
    Cochain2 out;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            SparseVec val = cochain1_even(c, a.bracket_ee(i, j));
            add_scaled(val, ad_ee(a, i, c.even_at(j)), Rational(-1));
            add_scaled(val, ad_ee(a, j, c.even_at(i)), Rational(1));
            if (!val.empty())
                out.set_psi(i, j, std::move(val));
        }
    for (int i = 0; i <= n; ++i)
        for (int t = 1; t <= m; ++t) {
            SparseVec val = cochain1_odd(c, a.bracket_eo(i, t));
            add_scaled(val, ad_eo(a, i, c.odd_at(t)), Rational(-1));
            add_scaled(val, ad_oe(a, t, c.even_at(i)), Rational(1));
            if (!val.empty())
                out.set_rho(i, t, std::move(val));
        }
    for (int t = 1; t <= m; ++t)
        for (int r = t; r <= m; ++r) {
            SparseVec val = cochain1_even(c, a.bracket_oo(t, r));
            add_scaled(val, ad_oo(a, t, c.odd_at(r)), Rational(-1));
            add_scaled(val, ad_oo(a, r, c.odd_at(t)), Rational(-1));
            if (!val.empty())
                out.set_b(t, r, std::move(val));
        }
    return out;
}

Cochain3 differential2(const SuperAlgebra& a, const Cochain2& c) {
    const int n = a.n();
    const int m = a.m();
    Cochain3 out;
    auto put = [](SparseVec& dst, SparseVec v, const Rational& coef) {
        add_scaled(dst, v, coef);
    };

    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                SparseVec val;
                put(val, psi_app(c, a.bracket_ee(i, j), k), Rational(1));
                put(val, psi_app(c, a.bracket_ee(i, k), j), Rational(-1));
                put(val, psi_app(c, a.bracket_ee(j, k), i), Rational(1));
                put(val, ad_ee(a, i, c.psi_at(j, k)), Rational(-1));
                put(val, ad_ee(a, j, c.psi_at(i, k)), Rational(1));
                put(val, ad_ee(a, k, c.psi_at(i, j)), Rational(-1));
                for (const auto& [w, v] : val)
                    out.add30(i, j, k, w, v);
            }

    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int t = 1; t <= m; ++t) {
                SparseVec val;
                put(val, rho_app_left(c, a.bracket_ee(i, j), t), Rational(1));
                put(val, rho_app_right(c, j, a.bracket_eo(i, t)), Rational(1));
                put(val, rho_app_right(c, i, a.bracket_eo(j, t)), Rational(-1));
                put(val, ad_eo(a, i, c.rho_at(j, t)), Rational(-1));
                put(val, ad_eo(a, j, c.rho_at(i, t)), Rational(1));
                put(val, ad_oe(a, t, c.psi_at(i, j)), Rational(-1));
                for (const auto& [w, v] : val)
                    out.add21(i, j, t, w, v);
            }

    for (int i = 0; i <= n; ++i)
        for (int t = 1; t <= m; ++t)
            for (int r = t; r <= m; ++r) {
                SparseVec val;
                put(val, b_app(c, a.bracket_eo(i, t), r), Rational(1));
                put(val, b_app(c, a.bracket_eo(i, r), t), Rational(1));
                put(val, psi_app(c, a.bracket_oo(t, r), i), Rational(1));
                put(val, ad_ee(a, i, c.b_at(t, r)), Rational(-1));
                put(val, ad_oo(a, t, c.rho_at(i, r)), Rational(1));
                put(val, ad_oo(a, r, c.rho_at(i, t)), Rational(1));
                for (const auto& [w, v] : val)
                    out.add12(i, t, r, w, v);
            }

    for (int t = 1; t <= m; ++t)
        for (int r = t; r <= m; ++r)
            for (int u = r; u <= m; ++u) {
                SparseVec val;
                put(val, rho_app_left(c, a.bracket_oo(t, r), u), Rational(1));
                put(val, rho_app_left(c, a.bracket_oo(t, u), r), Rational(1));
                put(val, rho_app_left(c, a.bracket_oo(r, u), t), Rational(1));
                put(val, ad_oe(a, t, c.b_at(r, u)), Rational(-1));
                put(val, ad_oe(a, r, c.b_at(t, u)), Rational(-1));
                put(val, ad_oe(a, u, c.b_at(t, r)), Rational(-1));
                for (const auto& [w, v] : val)
                    out.add03(t, r, u, w, v);
            }
    return out;
}

namespace {

int thread_budget(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    if (const char* env = std::getenv("FILIFORM_LAB_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw)
            hw = static_cast<unsigned>(cap);
    }
    if (jobs < hw)
        hw = static_cast<unsigned>(jobs ? jobs : 1);
    return static_cast<int>(hw);
}

// Shared accumulation target. Rows are owned exclusively by the key that
// produces them, so parallel workers never touch the same row.
using RowStore = std::vector<SparseVec>;

void run_parallel(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    int threads = thread_budget(jobs);
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < jobs;
                 i += static_cast<std::size_t>(threads))
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

RationalMatrix freeze_rows(RowStore rows, int cols) {
    RationalMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        RationalMatrix::Row row;
        row.reserve(rows[r].size());
        for (auto& [c, v] : rows[r])
            row.emplace_back(c, v);
        m.set_row(static_cast<int>(r), std::move(row));
    }
    return m;
}

}  // namespace

RationalMatrix assemble_d2_matrix(const SuperAlgebra& alg) {
    const int n = alg.n();
    const int m = alg.m();
    Cochain2Layout cols(n, m);
    Cochain3Layout rows_layout(n, m);
    RowStore rows(static_cast<std::size_t>(rows_layout.total()));

    // Column of the unknown psi(a,b)[target], with the antisymmetry sign;
    // nothing when a == b.
    auto for_psi_col = [&](int a, int b, auto&& emit) {
        if (a == b)
            return;
        Rational sign(1);
        if (a > b) {
            std::swap(a, b);
            sign = -1;
        }
        for (int v = 0; v <= n; ++v)
            emit(cols.psi_index(a, b, v), v, sign);
    };
    auto for_rho_col = [&](int i, int t, auto&& emit) {
        for (int u = 1; u <= m; ++u)
            emit(cols.rho_index(i, t, u), u, Rational(1));
    };
    auto for_b_col = [&](int t, int r, auto&& emit) {
        if (t > r)
            std::swap(t, r);
        for (int v = 0; v <= n; ++v)
            emit(cols.b_index(t, r, v), v, Rational(1));
    };

    auto keys30 = rows_layout.keys30();
    auto keys21 = rows_layout.keys21();
    auto keys12 = rows_layout.keys12();
    auto keys03 = rows_layout.keys03();

    auto add_cell = [&](int row, int col, const Rational& v) {
        add_scaled_entry(rows[static_cast<std::size_t>(row)], col, v);
    };

    auto job30 = [&](std::size_t idx) {
        auto [i, j, k] = keys30[idx];
        // +psi([X_i,X_j], X_k) - psi([X_i,X_k], X_j) + psi([X_j,X_k], X_i)
        auto direct = [&](const SparseVec& br, int other, const Rational& coef) {
            for (const auto& [a, c] : br)
                for_psi_col(a, other, [&](int col, int v, const Rational& sign) {
                    add_cell(rows_layout.row30(i, j, k, v), col, coef * c * sign);
                });
        };
        direct(alg.bracket_ee(i, j), k, Rational(1));
        direct(alg.bracket_ee(i, k), j, Rational(-1));
        direct(alg.bracket_ee(j, k), i, Rational(1));
        // -[X_i, psi(j,k)] + [X_j, psi(i,k)] - [X_k, psi(i,j)]
        auto action = [&](int x, int p, int q, const Rational& coef) {
            for_psi_col(p, q, [&](int col, int v, const Rational& sign) {
                for (const auto& [w, c] : alg.bracket_ee(x, v))
                    add_cell(rows_layout.row30(i, j, k, w), col, coef * c * sign);
            });
        };
        action(i, j, k, Rational(-1));
        action(j, i, k, Rational(1));
        action(k, i, j, Rational(-1));
    };

    auto job21 = [&](std::size_t idx) {
        auto [i, j, t] = keys21[idx];
        // +rho([X_i,X_j], Y_t)
        for (const auto& [a, c] : alg.bracket_ee(i, j))
            for_rho_col(a, t, [&](int col, int u, const Rational& s) {
                add_cell(rows_layout.row21(i, j, t, u), col, c * s);
            });
        // +rho(X_j, [X_i,Y_t]) - rho(X_i, [X_j,Y_t])
        for (const auto& [u0, c] : alg.bracket_eo(i, t))
            for_rho_col(j, u0, [&](int col, int u, const Rational& s) {
                add_cell(rows_layout.row21(i, j, t, u), col, c * s);
            });
        for (const auto& [u0, c] : alg.bracket_eo(j, t))
            for_rho_col(i, u0, [&](int col, int u, const Rational& s) {
                add_cell(rows_layout.row21(i, j, t, u), col, -c * s);
            });
        // -[X_i, rho(j,t)] + [X_j, rho(i,t)]
        auto action = [&](int x, int p, const Rational& coef) {
            for_rho_col(p, t, [&](int col, int u, const Rational& s) {
                for (const auto& [w, c] : alg.bracket_eo(x, u))
                    add_cell(rows_layout.row21(i, j, t, w), col, coef * c * s);
            });
        };
        action(i, j, Rational(-1));
        action(j, i, Rational(1));
        // -[Y_t, psi(i,j)] = +[psi(i,j), Y_t]
        for_psi_col(i, j, [&](int col, int v, const Rational& s) {
            for (const auto& [w, c] : alg.bracket_eo(v, t))
                add_cell(rows_layout.row21(i, j, t, w), col, c * s);
        });
    };

    auto job12 = [&](std::size_t idx) {
        auto [i, t, r] = keys12[idx];
        // +b([X_i,Y_t], Y_r) + b([X_i,Y_r], Y_t)
        for (const auto& [u0, c] : alg.bracket_eo(i, t))
            for_b_col(u0, r, [&](int col, int v, const Rational& s) {
                add_cell(rows_layout.row12(i, t, r, v), col, c * s);
            });
        for (const auto& [u0, c] : alg.bracket_eo(i, r))
            for_b_col(u0, t, [&](int col, int v, const Rational& s) {
                add_cell(rows_layout.row12(i, t, r, v), col, c * s);
            });
        // +psi([Y_t,Y_r], X_i)
        for (const auto& [a, c] : alg.bracket_oo(t, r))
            for_psi_col(a, i, [&](int col, int v, const Rational& s) {
                add_cell(rows_layout.row12(i, t, r, v), col, c * s);
            });
        // -[X_i, b(t,r)]
        for_b_col(t, r, [&](int col, int v, const Rational& s) {
            for (const auto& [w, c] : alg.bracket_ee(i, v))
                add_cell(rows_layout.row12(i, t, r, w), col, -c * s);
        });
        // +[Y_t, rho(i,r)] + [Y_r, rho(i,t)]
        auto action = [&](int y, int odd_arg, const Rational& coef) {
            for_rho_col(i, odd_arg, [&](int col, int u, const Rational& s) {
                for (const auto& [w, c] : alg.bracket_oo(y, u))
                    add_cell(rows_layout.row12(i, t, r, w), col, coef * c * s);
            });
        };
        action(t, r, Rational(1));
        action(r, t, Rational(1));
    };

    auto job03 = [&](std::size_t idx) {
        auto [t, r, u] = keys03[idx];
        // +rho([Y_t,Y_r], Y_u) + cyclic
        auto direct = [&](int y1, int y2, int y3) {
            for (const auto& [a, c] : alg.bracket_oo(y1, y2))
                for_rho_col(a, y3, [&](int col, int w, const Rational& s) {
                    add_cell(rows_layout.row03(t, r, u, w), col, c * s);
                });
        };
        direct(t, r, u);
        direct(t, u, r);
        direct(r, u, t);
        // -[Y_t, b(r,u)] - [Y_r, b(t,u)] - [Y_u, b(t,r)]
        // [Y_y, X_v] = -[X_v, Y_y], so the net contribution is +[X_v, Y_y].
        auto action = [&](int y, int o1, int o2) {
            for_b_col(o1, o2, [&](int col, int v, const Rational& s) {
                for (const auto& [w, c] : alg.bracket_eo(v, y))
                    add_cell(rows_layout.row03(t, r, u, w), col, c * s);
            });
        };
        action(t, r, u);
        action(r, t, u);
        action(u, t, r);
    };

    run_parallel(keys30.size(), job30);
    run_parallel(keys21.size(), job21);
    run_parallel(keys12.size(), job12);
    run_parallel(keys03.size(), job03);

    return freeze_rows(std::move(rows), cols.total());
}

int cochain1_dim(const SuperAlgebra& a) {
    return (a.n() + 1) * (a.n() + 1) + a.m() * a.m();
}

SparseVec encode_cochain1(const Cochain1& c, int n, int m) {
    SparseVec out;
    const int odd_offset = (n + 1) * (n + 1);
    for (const auto& [i, v] : c.even_part)
        for (const auto& [a, val] : v)
            out[i * (n + 1) + a] = val;
    for (const auto& [t, v] : c.odd_part)
        for (const auto& [u, val] : v)
            out[odd_offset + (t - 1) * m + (u - 1)] = val;
    return out;
}

RationalMatrix assemble_d1_matrix(const SuperAlgebra& alg) {
    const int n = alg.n();
    const int m = alg.m();
    Cochain2Layout rows_layout(n, m);
    RowStore rows(static_cast<std::size_t>(rows_layout.total()));
    const int odd_offset = (n + 1) * (n + 1);
    auto even_col = [&](int i, int target) { return i * (n + 1) + target; };
    auto odd_col = [&](int t, int target) {
        return odd_offset + (t - 1) * m + (target - 1);
    };
    auto add_cell = [&](int row, int col, const Rational& v) {
        add_scaled_entry(rows[static_cast<std::size_t>(row)], col, v);
    };

    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            // +c([X_i,X_j])
            for (const auto& [a, c] : alg.bracket_ee(i, j))
                for (int v = 0; v <= n; ++v)
                    add_cell(rows_layout.psi_index(i, j, v), even_col(a, v), c);
            // -[X_i, c(X_j)] + [X_j, c(X_i)]
            for (int v = 0; v <= n; ++v) {
                for (const auto& [w, c] : alg.bracket_ee(i, v))
                    add_cell(rows_layout.psi_index(i, j, w), even_col(j, v), -c);
                for (const auto& [w, c] : alg.bracket_ee(j, v))
                    add_cell(rows_layout.psi_index(i, j, w), even_col(i, v), c);
            }
        }
    for (int i = 0; i <= n; ++i)
        for (int t = 1; t <= m; ++t) {
            // +c([X_i,Y_t])
            for (const auto& [a, c] : alg.bracket_eo(i, t))
                for (int u = 1; u <= m; ++u)
                    add_cell(rows_layout.rho_index(i, t, u), odd_col(a, u), c);
            // -[X_i, c(Y_t)]
            for (int u = 1; u <= m; ++u)
                for (const auto& [w, c] : alg.bracket_eo(i, u))
                    add_cell(rows_layout.rho_index(i, t, w), odd_col(t, u), -c);
            // +[Y_t, c(X_i)] = -[c(X_i), Y_t]
            for (int v = 0; v <= n; ++v)
                for (const auto& [w, c] : alg.bracket_eo(v, t))
                    add_cell(rows_layout.rho_index(i, t, w), even_col(i, v), -c);
        }
    for (int t = 1; t <= m; ++t)
        for (int r = t; r <= m; ++r) {
            // +c([Y_t,Y_r])
            for (const auto& [a, c] : alg.bracket_oo(t, r))
                for (int v = 0; v <= n; ++v)
                    add_cell(rows_layout.b_index(t, r, v), even_col(a, v), c);
            // -[Y_t, c(Y_r)] - [Y_r, c(Y_t)]
            for (int u = 1; u <= m; ++u) {
                for (const auto& [w, c] : alg.bracket_oo(t, u))
                    add_cell(rows_layout.b_index(t, r, w), odd_col(r, u), -c);
                for (const auto& [w, c] : alg.bracket_oo(r, u))
                    add_cell(rows_layout.b_index(t, r, w), odd_col(t, u), -c);
            }
        }
    return freeze_rows(std::move(rows), cochain1_dim(alg));
}

CocycleBasis z02_basis(const SuperAlgebra& a) {
    Cochain2Layout layout(a.n(), a.m());
    RationalMatrix d2 = assemble_d2_matrix(a);
    KernelResult kern = kernel_with_info(d2);
    CocycleBasis out;
    out.ambient_dim = layout.total();
    out.pivots = kern.free_columns;
    for (const auto& v : kern.basis) {
        Cochain2 c = layout.decode(v);
        Cochain3 check = differential2(a, c);
        if (!check.is_zero())
            throw std::logic_error("z02_basis: kernel vector fails the cocycle "
                                   "equation at " + check.first_nonzero());
        out.vectors.push_back(std::move(c));
    }
    return out;
}

CocycleBasis z02_component(const SuperAlgebra& a, CochainPart part) {
    Cochain2Layout layout(a.n(), a.m());
    int offset = 0;
    int len = 0;
    switch (part) {
        case CochainPart::psi:
            offset = layout.psi_offset();
            len = layout.psi_dim();
            break;
        case CochainPart::rho:
            offset = layout.rho_offset();
            len = layout.rho_dim();
            break;
        case CochainPart::b:
            offset = layout.b_offset();
            len = layout.b_dim();
            break;
    }
    RationalMatrix d2 = assemble_d2_matrix(a);
    RationalMatrix restricted(d2.rows(), len);
    for (int r = 0; r < d2.rows(); ++r) {
        RationalMatrix::Row row;
        for (const auto& [c, v] : d2.row(r))
            if (c >= offset && c < offset + len)
                row.emplace_back(c - offset, v);
        restricted.set_row(r, std::move(row));
    }
    KernelResult kern = kernel_with_info(restricted);
    CocycleBasis out;
    out.ambient_dim = len;
    out.pivots = kern.free_columns;
    for (const auto& v : kern.basis) {
        SparseVec shifted;
        for (const auto& [c, val] : v)
            shifted.emplace_hint(shifted.end(), c + offset, val);
        Cochain2 c2 = layout.decode(shifted);
        Cochain3 check = differential2(a, c2);
        if (!check.is_zero())
            throw std::logic_error("z02_component: kernel vector fails the "
                                   "cocycle equation at " + check.first_nonzero());
        out.vectors.push_back(std::move(c2));
    }
    return out;
}

H02Dims h02_dims(const SuperAlgebra& a) {
    RationalMatrix d2 = assemble_d2_matrix(a);
    RationalMatrix d1 = assemble_d1_matrix(a);
    RationalMatrix prod = d2.multiplied_by(d1);
    if (prod.nonzeros() != 0)
        throw std::logic_error("h02_dims: d o d is nonzero, coboundaries are "
                               "not cocycles");
    H02Dims out;
    out.z = d2.cols() - rank(d2);
    out.b = rank(d1);
    out.h = out.z - out.b;
    return out;
}

}  // namespace filiform
