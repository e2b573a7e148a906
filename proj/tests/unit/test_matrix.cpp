#include "filiform/matrix.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace filiform;
using filiform::testing::Rng;

namespace {

RationalMatrix from_dense(const std::vector<std::vector<int>>& rows, int cols) {
    RationalMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0)
                m.set(static_cast<int>(r), static_cast<int>(c), Rational(rows[r][c]));
    return m;
}

}  // namespace

TEST_CASE("rref of identity") {
    RationalMatrix id = RationalMatrix::identity(3);
    RrefResult r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
}

TEST_CASE("rref of the zero matrix") {
    RationalMatrix z(4, 3);
    RrefResult r = rref(z);
    CHECK(r.matrix == z);
    CHECK(r.pivots.empty());
}

TEST_CASE("rref of a rank-one 2x2") {
    RationalMatrix m = from_dense({{1, 2}, {2, 4}}, 2);
    RrefResult r = rref(m);
    CHECK(r.matrix == from_dense({{1, 2}, {0, 0}}, 2));
    CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("kernel basis examples") {
    CHECK(kernel_basis(RationalMatrix::identity(4)).empty());
    CHECK(kernel_basis(RationalMatrix(2, 3)).size() == 3);

    RationalMatrix m = from_dense({{1, 1, 0}}, 3);
    auto kern = kernel_basis(m);
    REQUIRE(kern.size() == 2);
    CHECK(kern[0] == SparseVec{{0, Rational(-1)}, {1, Rational(1)}});
    CHECK(kern[1] == SparseVec{{2, Rational(1)}});
}

TEST_CASE("solve_affine examples") {
    SUBCASE("identity system") {
        std::vector<Rational> b{Rational(5), Rational(-7)};
        auto sol = solve_affine(RationalMatrix::identity(2), b);
        REQUIRE(sol);
        CHECK(sol->particular == b);
        CHECK(sol->homogeneous.empty());
    }
    SUBCASE("inconsistent") {
        RationalMatrix m(1, 1);
        CHECK(!solve_affine(m, {Rational(1)}));
    }
    SUBCASE("underdetermined") {
        RationalMatrix m = from_dense({{1, 1}}, 2);
        auto sol = solve_affine(m, {Rational(2)});
        REQUIRE(sol);
        CHECK(sol->particular == std::vector<Rational>{Rational(2), Rational(0)});
        REQUIRE(sol->homogeneous.size() == 1);
        CHECK(sol->homogeneous[0] == SparseVec{{0, Rational(-1)}, {1, Rational(1)}});
    }
}

TEST_CASE("inverse") {
    RationalMatrix m = from_dense({{2, 1}, {1, 1}}, 2);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m.multiplied_by(*inv) == RationalMatrix::identity(2));
    CHECK(!inverse(from_dense({{1, 2}, {2, 4}}, 2)));
}

TEST_CASE("linalg invariants on random sparse matrices") {
    Rng rng(0xfeedULL);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.uniform(1, 8);
        int cols = rng.uniform(1, 8);
        RationalMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng.uniform(0, 2) == 0)
                    m.set(r, c, rng.small_rational());

        RrefResult red = rref(m);
        // rank-nullity and exact kernel membership
        auto kern = kernel_basis(m);
        CHECK(static_cast<int>(kern.size()) + red.rank() == cols);
        for (const auto& v : kern)
            CHECK(m.apply_sparse(v).empty());
        // rref is idempotent
        RrefResult twice = rref(red.matrix);
        CHECK(twice.matrix == red.matrix);
        CHECK(twice.pivots == red.pivots);
        // pivots strictly increasing, entries canonical
        for (std::size_t i = 1; i < red.pivots.size(); ++i)
            CHECK(red.pivots[i - 1] < red.pivots[i]);
        for (int r = 0; r < rows; ++r)
            for (const auto& [c, v] : red.matrix.row(r)) {
                CHECK(v != 0);
                CHECK(rat_is_canonical(v));
            }
        // consistent systems round-trip
        std::vector<Rational> x(static_cast<std::size_t>(cols));
        for (auto& xi : x)
            xi = rng.small_rational();
        auto rhs = m.apply(x);
        auto sol = solve_affine(m, rhs);
        REQUIRE(sol);
        CHECK(m.apply(sol->particular) == rhs);
        CHECK(sol->homogeneous.size() == kern.size());
    }
}

TEST_CASE("subspace canonical representation") {
    std::vector<SparseVec> vecs{{{0, Rational(1)}, {1, Rational(1)}},
                                {{1, Rational(1)}, {2, Rational(1)}}};
    Subspace s = Subspace::span(3, vecs);
    CHECK(s.rank() == 2);
    CHECK(s.contains(SparseVec{{0, Rational(1)}, {2, Rational(-1)}}));
    CHECK(!s.contains(SparseVec{{0, Rational(1)}}));
    Subspace again = Subspace::span(3, s.basis_vectors());
    CHECK(s == again);
    CHECK(Subspace::zero(3).rank() == 0);
}
