#include "filiform/superalgebra.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace filiform;
using filiform::testing::Rng;
using filiform::testing::sv;

namespace {

BasisElement X(int i) { return {Parity::even, i}; }
BasisElement Y(int t) { return {Parity::odd, t}; }

}  // namespace

TEST_CASE("model algebra brackets") {
    SuperAlgebra a = lnm(3, 2);
    CHECK(a.bracket_ee(0, 1) == sv({{2, 1}}));
    CHECK(a.bracket_eo(0, 1) == sv({{2, 1}}));
    CHECK(a.bracket_ee(1, 2).empty());
    CHECK(a.bracket_ee(0, 3).empty());
    CHECK(a.bracket_eo(0, 2).empty());
    // graded antisymmetry at the vector level
    SuperVector v = a.bracket(SuperVector::unit(X(1)), SuperVector::unit(X(0)));
    CHECK(v == Rational(-1) * SuperVector::unit(X(2)));
    SuperVector w = a.bracket(SuperVector::unit(Y(1)), SuperVector::unit(X(0)));
    CHECK(w == Rational(-1) * SuperVector::unit(Y(2)));
}

TEST_CASE("bracket rejects out-of-range indices") {
    SuperAlgebra a = lnm(2, 1);
    CHECK_THROWS_AS(a.bracket_ee(0, 3), std::out_of_range);
    CHECK_THROWS_AS(a.bracket_eo(0, 2), std::out_of_range);
}

TEST_CASE("jacobi holds for the model and abelian algebras") {
    CHECK(check_jacobi(lnm(5, 3)).empty());
    CHECK(check_jacobi(abelian_superalgebra(4, 2)).empty());
}

TEST_CASE("jacobi violation is located") {
    // L_{3,2} with [X_1,X_2] = X_1 added
    StructureConstants sc = lnm(3, 2).constants();
    sc.C[{1, 2}] = sv({{1, 1}});
    SuperAlgebra bad(3, 2, sc);
    auto violations = check_jacobi(bad);
    REQUIRE(!violations.empty());
    bool found = false;
    for (const auto& v : violations)
        if (v.triple == std::array<BasisElement, 3>{X(0), X(1), X(2)})
            found = true;
    CHECK(found);
}

TEST_CASE("lower central series of the model algebra") {
    NilData nd = lower_central_series(lnm(3, 2));
    REQUIRE(nd.nilindex);
    CHECK(*nd.nilindex == std::make_pair(3, 2));
    std::vector<int> even_dims;
    for (const auto& s : nd.even_series)
        even_dims.push_back(s.rank());
    CHECK(even_dims == std::vector<int>{4, 2, 1, 0});
    std::vector<int> odd_dims;
    for (const auto& s : nd.odd_series)
        odd_dims.push_back(s.rank());
    CHECK(odd_dims == std::vector<int>{2, 1, 0});
}

TEST_CASE("nilindex across sizes") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 4; ++m) {
            auto ni = super_nilindex(lnm(n, m));
            REQUIRE(ni);
            CHECK(*ni == std::make_pair(n, m));
        }
    auto ab = super_nilindex(abelian_superalgebra(3, 2));
    REQUIRE(ab);
    CHECK(*ab == std::make_pair(1, 1));
}

TEST_CASE("non-nilpotent algebra has no nilindex") {
    StructureConstants sc;
    sc.C[{0, 1}] = sv({{1, 1}});  // [X_0,X_1] = X_1
    SuperAlgebra a(1, 0, sc);
    CHECK(check_jacobi(a).empty());
    CHECK(!super_nilindex(a));
    CHECK(!is_filiform(a));
}

TEST_CASE("filiformity") {
    CHECK(is_filiform(lnm(4, 3)));
    CHECK(!is_filiform(abelian_superalgebra(3, 2)));
}

TEST_CASE("adapted basis verification") {
    CHECK(verify_adapted_basis(lnm(6, 4)));

    // [X_0,X_n] = X_1 breaks the chain condition
    StructureConstants sc = lnm(3, 2).constants();
    sc.C[{0, 3}] = sv({{1, 1}});
    CHECK(!verify_adapted_basis(SuperAlgebra(3, 2, sc)));

    // [X_1,X_2] = X_3 is outside span(X_4,X_5)
    StructureConstants sc2 = lnm(5, 2).constants();
    sc2.C[{1, 2}] = sv({{3, 1}});
    CHECK(!verify_adapted_basis(SuperAlgebra(5, 2, sc2)));
    sc2.C[{1, 2}] = sv({{4, 1}, {5, 1}});
    CHECK(verify_adapted_basis(SuperAlgebra(5, 2, sc2)));
}

TEST_CASE("variety embedding dimension") {
    CHECK(variety_embedding_dim(1, 1) == 6);
    CHECK(variety_embedding_dim(0, 0) == 0);
    CHECK(variety_embedding_dim(2, 3) == 63);
}

TEST_CASE("bracket is bilinear and alternating on even vectors") {
    SuperAlgebra a = lnm(4, 3);
    Rng rng(0x77ULL);
    for (int trial = 0; trial < 20; ++trial) {
        SuperVector x, y, z;
        for (int i = 0; i <= 4; ++i) {
            x.add(X(i), rng.small_rational());
            y.add(X(i), rng.small_rational());
            z.add(X(i), rng.small_rational());
        }
        CHECK(a.bracket(x, x).is_zero());
        SuperVector yz = y;
        yz += z;
        CHECK(a.bracket(x, yz) == a.bracket(x, y) + a.bracket(x, z));
        Rational c(3, 2);
        CHECK(a.bracket(c * x, y) == c * a.bracket(x, y));
    }
}

TEST_CASE("nilindex is invariant under graded basis changes") {
    Rng rng(0x1234ULL);
    SuperAlgebra a = lnm(4, 2);
    for (int trial = 0; trial < 5; ++trial) {
        RationalMatrix g0 = filiform::testing::random_invertible(rng, 5);
        RationalMatrix g1 = filiform::testing::random_invertible(rng, 2);
        SuperAlgebra b = apply_basis_change(a, g0, g1);
        CHECK(check_jacobi(b).empty());
        auto ni = super_nilindex(b);
        REQUIRE(ni);
        CHECK(*ni == std::make_pair(4, 2));
    }
}

TEST_CASE("basis change by the identity is the identity") {
    SuperAlgebra a = lnm(3, 2);
    SuperAlgebra b = apply_basis_change(a, RationalMatrix::identity(4),
                                        RationalMatrix::identity(2));
    CHECK(a == b);
}
