#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homhopf/catalog.hpp"
#include "homhopf/constructions.hpp"

using namespace homhopf;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i); }

}  // namespace

TEST_CASE("two-dimensional Hom-Hopf algebra with x^2 = 0") {
    const auto H = catalog_ax1().hopf;
    CHECK(H.product(e(2, 0), e(2, 1)) == Vector{0, -1});
    CHECK(H.product(e(2, 1), e(2, 1)).is_zero());
    CHECK(H.counit()[1] == 0);
    CHECK(H.antipode().row(1) == Vector{0, -1});
    CHECK(H.alpha().row(1) == Vector{0, -1});
}

TEST_CASE("Hom-Sweedler algebra") {
    const auto sw = catalog_sweedler_hom();
    const auto& H = sw.hopf;
    CHECK(sw.basis == std::vector<std::string>{"1", "g", "x", "gx"});
    // g . x is the stored gx; x . g = -gx
    CHECK(H.product(e(4, 1), e(4, 2)) == e(4, 3));
    CHECK(H.product(e(4, 2), e(4, 1)) == Vector{0, 0, 0, -1});
    CHECK(H.alpha().row(3) == Vector{0, 0, 0, -1});
    CHECK(H.antipode().row(2) == Vector{0, 0, 0, -1});
    CHECK(check_hopf_suite(H).passed());
    CHECK(check_quasitriangular(H.bialgebra(), *sw.rmatrix).passed());
}

TEST_CASE("cyclic Hom-group algebras") {
    const auto H = catalog_cyclic(3).hopf;
    CHECK(H.product(e(3, 1), e(3, 2)) == e(3, 0));
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto C = catalog_cyclic(n).hopf;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t inv = (n - i) % n;
            CHECK(C.comul()(i, inv, inv) == 1);
            CHECK(C.antipode()(i, inv) == 1);
            for (std::size_t j = 0; j < n; ++j) CHECK(C.mul()(i, j, (2 * n - i - j) % n) == 1);
        }
        CHECK(check_hopf_suite(C).passed());
    }
    CHECK_THROWS_AS(catalog_cyclic(1), InvalidParameter);
    CHECK_THROWS_AS(catalog_cyclic(0), InvalidParameter);
}

TEST_CASE("cyclic entries are Yau twists of the classical group algebras") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto classical = catalog_classical_cyclic(n).hopf;
        Matrix inversion(n, n);
        for (std::size_t i = 0; i < n; ++i) inversion(i, (n - i) % n) = 1;
        const auto twisted = yau_twist(classical, inversion);
        const auto C = catalog_cyclic(n).hopf;
        CHECK(twisted.mul() == C.mul());
        CHECK(twisted.comul() == C.comul());
        CHECK(twisted.alpha() == C.alpha());
        CHECK(twisted.antipode() == C.antipode());
        CHECK(twisted.unit() == C.unit());
        CHECK(twisted.counit() == C.counit());
    }
}

TEST_CASE("group algebras from tables") {
    const std::vector<std::vector<std::size_t>> z2{{0, 1}, {1, 0}};
    const auto k2 = catalog_group(z2, {0, 1}, "z2");
    CHECK(k2.hopf.alpha() == Matrix::identity(2));
    CHECK(k2.hopf.mul()(1, 1, 0) == 1);
    CHECK(check_hopf_suite(k2.hopf).passed());

    std::vector<std::vector<std::size_t>> z5(5, std::vector<std::size_t>(5));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) z5[i][j] = (i + j) % 5;
    const auto g5 = catalog_group(z5, {0, 4, 3, 2, 1}, "z5");
    CHECK(g5.hopf.mul() == catalog_cyclic(5).hopf.mul());
    CHECK(g5.hopf.comul() == catalog_cyclic(5).hopf.comul());

    CHECK(check_hopf_suite(catalog_s3().hopf).passed());

    CHECK_THROWS_AS(catalog_group({{0, 1}, {1, 1}}, {0, 1}, "bad"), NotAGroup);
    CHECK_THROWS_AS(catalog_group({{0, 1}, {0, 1}}, {0, 1}, "bad"), NotAGroup);
    CHECK_THROWS_AS(catalog_group(z2, {1, 0}, "bad"), NotAnAutomorphism);
    CHECK_THROWS_AS(catalog_group(z2, {0, 0}, "bad"), NotAnAutomorphism);
}

TEST_CASE("golden smash-coproduct tables") {
    const Ex27Expected g = catalog_ex27_expected();
    // 0 = 1#1, 1 = 1#g, 2 = x#1, 3 = x#g
    CHECK(g.mul(3, 0, 3) == -1);
    CHECK(g.mul.slice(3, 2).is_zero());
    CHECK(g.antipode(1, 1) == 1);
    CHECK(g.antipode(3, 3) == 1);
}

TEST_CASE("catalog lookup") {
    CHECK(catalog_lookup("ax1").name == "ax1");
    CHECK(catalog_lookup("cyclic:5").hopf.dim() == 5);
    CHECK(catalog_lookup("cyclic").hopf.dim() == 3);
    CHECK(catalog_lookup("classical_cyclic:4").hopf.alpha() == Matrix::identity(4));
    CHECK(catalog_lookup("s3").hopf.dim() == 6);
    CHECK_THROWS_AS(catalog_lookup("nope"), InvalidParameter);
    CHECK_THROWS_AS(catalog_lookup("cyclic:x"), InvalidParameter);
    CHECK_THROWS_AS(catalog_lookup("cyclic:"), InvalidParameter);
    CHECK_THROWS_AS(catalog_lookup("ax1:2"), InvalidParameter);
    CHECK_THROWS_AS(catalog_lookup("cyclic:1"), InvalidParameter);
}

TEST_CASE("bundled module and comodule data") {
    const auto ax1 = catalog_ax1();
    REQUIRE(ax1.partner);
    REQUIRE(ax1.action);
    REQUIRE(ax1.coaction);
    CHECK(ax1.partner->alpha() == Matrix::identity(2));
    CHECK(check_module_algebra(*ax1.action).passed());
    CHECK(check_comodule_coalgebra(*ax1.coaction).passed());
    CHECK(bicrossproduct_hypotheses(ax1.hopf, *ax1.partner, *ax1.action, *ax1.coaction).passed());
}
