#include "filiform/cohomology.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace filiform;
using filiform::testing::Rng;
using filiform::testing::sv;

TEST_CASE("differential1 of zero is zero") {
    CHECK(differential1(lnm(3, 2), Cochain1{}).is_zero());
}

TEST_CASE("differential1 sign anchor: identity cochain") {
    // c = id gives dc = -nu_0; in particular dc(X_0,X_1) = -X_2.
    SuperAlgebra a = lnm(3, 2);
    Cochain1 c;
    for (int i = 0; i <= 3; ++i)
        c.set_even(i, sv({{i, 1}}));
    for (int t = 1; t <= 2; ++t)
        c.set_odd(t, sv({{t, 1}}));
    Cochain2 dc = differential1(a, c);
    CHECK(dc.psi_at(0, 1) == sv({{2, -1}}));
    CHECK(dc.psi_at(0, 2) == sv({{3, -1}}));
    CHECK(dc.rho_at(0, 1) == sv({{2, -1}}));
    CHECK(dc.b_at(1, 1).empty());
}

TEST_CASE("differential1 feeds differential2 consistently") {
    SuperAlgebra a = lnm(2, 1);
    Cochain1 c;
    c.set_even(2, sv({{1, 1}}));  // c(X_2) = X_1
    Cochain2 dc = differential1(a, c);
    CHECK(dc.psi_at(0, 2) == sv({{2, -1}}));
    CHECK(differential2(a, dc).is_zero());
}

TEST_CASE("differential2 of zero is zero") {
    CHECK(differential2(lnm(4, 2), Cochain2{}).is_zero());
}

TEST_CASE("differential2 anchor: psi(X_1,X_2)=X_3 is closed over L_{3,1}") {
    SuperAlgebra a = lnm(3, 1);
    Cochain2 c;
    c.add_psi(1, 2, 3, Rational(1));
    CHECK(differential2(a, c).is_zero());
}

TEST_CASE("differential2 anchor: b(Y_1,Y_1)=X_1 is not closed over L_{3,2}") {
    SuperAlgebra a = lnm(3, 2);
    Cochain2 c;
    c.add_b(1, 1, 1, Rational(1));
    Cochain3 dc = differential2(a, c);
    CHECK(!dc.is_zero());
    // the failure shows on (X_0, Y_1, Y_1): 2 b(Y_2,Y_1) - [X_0, X_1] = -X_2
    auto it = dc.c12.find({0, 1, 1});
    REQUIRE(it != dc.c12.end());
    CHECK(it->second == sv({{2, -1}}));
}

TEST_CASE("d after d is zero on random 1-cochains") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {4, 3}, {3, 1}}) {
        SuperAlgebra a = lnm(n, m);
        Rng rng(0xabcULL + static_cast<std::uint64_t>(n * 16 + m));
        for (int trial = 0; trial < 25; ++trial) {
            Cochain1 c = filiform::testing::random_cochain1(rng, n, m);
            CHECK(differential2(a, differential1(a, c)).is_zero());
        }
    }
}

TEST_CASE("assembled matrix agrees with the direct evaluator") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
        SuperAlgebra a = lnm(n, m);
        Cochain2Layout l2(n, m);
        Cochain3Layout l3(n, m);
        RationalMatrix d2 = assemble_d2_matrix(a);
        RationalMatrix d1 = assemble_d1_matrix(a);
        Rng rng(0x5150ULL + static_cast<std::uint64_t>(n + 8 * m));
        for (int trial = 0; trial < 10; ++trial) {
            Cochain2 c = filiform::testing::random_cochain2(rng, n, m);
            CHECK(d2.apply_sparse(l2.encode(c)) == l3.encode(differential2(a, c)));
            Cochain1 c1 = filiform::testing::random_cochain1(rng, n, m);
            CHECK(d1.apply_sparse(encode_cochain1(c1, n, m)) ==
                  l2.encode(differential1(a, c1)));
        }
    }
}

TEST_CASE("all even 2-cochains over an abelian algebra are cocycles") {
    SuperAlgebra a = abelian_superalgebra(2, 2);
    Cochain2Layout layout(2, 2);
    CocycleBasis basis = z02_basis(a);
    CHECK(basis.dim() == layout.total());
}

TEST_CASE("coboundaries vanish over an abelian algebra") {
    H02Dims dims = h02_dims(abelian_superalgebra(2, 2));
    CHECK(dims.b == 0);
    CHECK(dims.z == dims.h);
}
