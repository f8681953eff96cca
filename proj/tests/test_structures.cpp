#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homhopf/catalog.hpp"
#include "homhopf/constructions.hpp"
#include "homhopf/structures.hpp"

using namespace homhopf;

namespace {

HomBialgebra with_comul(const HomBialgebra& B, const Tensor3& comul) {
    return HomBialgebra(B.algebra(), HomCoalgebra(comul, B.counit(), B.alpha()));
}

HomHopfAlgebra with_antipode(const HomHopfAlgebra& H, const Matrix& S) { return HomHopfAlgebra(H.bialgebra(), S); }

HomBialgebra onedim() { return catalog_onedim().hopf.bialgebra(); }

// h . m = eps(h) alpha(m)
ModuleAction counit_action(const HomBialgebra& H, const HomBialgebra& M) {
    Tensor3 act(H.dim(), M.dim(), M.dim());
    for (std::size_t h = 0; h < H.dim(); ++h)
        for (std::size_t m = 0; m < M.dim(); ++m)
            for (std::size_t k = 0; k < M.dim(); ++k) act(h, m, k) = H.counit()[h] * M.alpha()(m, k);
    return ModuleAction(H, M, act);
}

// rho(m) = alpha(m) (x) 1
ComoduleCoaction trivial_coaction(const HomBialgebra& H, const HomBialgebra& M) {
    Tensor3 co(M.dim(), M.dim(), H.dim());
    for (std::size_t m = 0; m < M.dim(); ++m)
        for (std::size_t k = 0; k < M.dim(); ++k)
            for (std::size_t h = 0; h < H.dim(); ++h) co(m, k, h) = M.alpha()(m, k) * H.unit()[h];
    return ComoduleCoaction(H, M, co);
}

bool has_failure(const CheckReport& r, const std::string& id) {
    const CheckEntry* e = r.find(id);
    return e && !e->passed && e->witness;
}

}  // namespace

TEST_CASE("Hom-algebra axioms") {
    CHECK(check_hom_algebra(catalog_ax1().hopf.algebra()).passed());
    CHECK(check_hom_algebra(onedim().algebra()).passed());

    const auto ax1 = catalog_ax1().hopf;
    Tensor3 mul = ax1.mul();
    mul(1, 1, 1) = 1;  // x . x = x
    CheckReport r = check_hom_algebra(HomAlgebra(mul, ax1.unit(), ax1.alpha()));
    CHECK_FALSE(r.passed());
    CHECK(has_failure(r, "algebra.hom_associative"));
    CHECK(has_failure(r, "algebra.alpha_multiplicative"));

    // x . x = 1 is the Yau twist of k[Z/2] by g -> -g, still a Hom-algebra
    Tensor3 twisted = ax1.mul();
    twisted(1, 1, 0) = 1;
    CHECK(check_hom_algebra(HomAlgebra(twisted, ax1.unit(), ax1.alpha())).passed());
}

TEST_CASE("Hom-coalgebra axioms") {
    const auto ax1 = catalog_ax1().hopf;
    CHECK(check_hom_coalgebra(ax1.coalgebra()).passed());
    CHECK(check_hom_coalgebra(onedim().coalgebra()).passed());

    Tensor3 comul = ax1.comul();
    comul(1, 1, 0) = 1;  // Delta(x) = x (x) 1 - 1 (x) x
    CheckReport r = check_hom_coalgebra(HomCoalgebra(comul, ax1.counit(), ax1.alpha()));
    CHECK(has_failure(r, "coalgebra.right_counit"));
}

TEST_CASE("Hom-bialgebra axioms") {
    const auto sw = catalog_sweedler_hom().hopf;
    CHECK(check_hom_bialgebra(sw.bialgebra()).passed());
    CHECK(check_hom_bialgebra(onedim()).passed());

    Tensor3 comul = sw.comul();
    comul(2, 0, 2) *= 2;  // second term of Delta(x) doubled
    CheckReport r = check_hom_bialgebra(with_comul(sw.bialgebra(), comul));
    CHECK(has_failure(r, "bialgebra.comul_multiplicative"));
}

TEST_CASE("the two-dimensional Hom-algebra with x^2 = 0 is not comultiplicative") {
    // Delta(x)Delta(x) = 2 x (x) x while Delta(x^2) = 0.
    CheckReport r = check_hom_bialgebra(catalog_ax1().hopf.bialgebra());
    const CheckEntry* e = r.find("bialgebra.comul_multiplicative");
    REQUIRE(e);
    CHECK_FALSE(e->passed);
    REQUIRE(e->witness);
    CHECK(e->witness->index == std::vector<std::size_t>{1, 1});
    CHECK(e->witness->lhs.is_zero());
    CHECK(e->witness->rhs == Vector{0, 0, 0, 2});
    CHECK(r.failures() == 1);
}

TEST_CASE("antipode axioms") {
    CHECK(check_antipode(catalog_ax1().hopf).passed());
    CHECK(check_antipode(catalog_classical_cyclic(2).hopf).passed());

    const auto sw = catalog_sweedler_hom().hopf;
    Matrix S = sw.antipode();
    S(2, 3) = 0;
    S(2, 2) = -1;  // S(x) = -x
    CheckReport r = check_antipode(with_antipode(sw, S));
    const CheckEntry* e = r.find("antipode.left_inverse");
    REQUIRE(e);
    CHECK_FALSE(e->passed);
    CHECK(e->witness->index == std::vector<std::size_t>{2});
}

TEST_CASE("module and module-algebra axioms") {
    const auto ax1 = catalog_ax1();
    CHECK(check_module(*ax1.action).passed());
    CHECK(check_module_algebra(*ax1.action).passed());
    const auto sw = catalog_sweedler_hom().hopf;
    CHECK(check_module(counit_action(sw.bialgebra(), sw.bialgebra())).passed());
    CHECK(check_module_algebra(counit_action(sw.bialgebra(), sw.bialgebra())).passed());
    CHECK(check_module_algebra(self_action(sw)).passed());

    Tensor3 act = ax1.action->act;
    act(1, 1, 1) = 2;  // g . x = 2x
    ModuleAction broken(ax1.action->actor, ax1.action->carrier, act);
    CHECK_FALSE(check_module(broken).passed());
    // the compatibility conditions alone do not see this one
    CHECK(check_module_algebra(broken).passed());

    Tensor3 act2 = ax1.action->act;
    act2(1, 0, 1) = 1;  // g . 1 = 1 + x
    CHECK_FALSE(check_module_algebra(ModuleAction(ax1.action->actor, ax1.action->carrier, act2)).passed());
}

TEST_CASE("comodule and comodule-coalgebra axioms") {
    const auto ax1 = catalog_ax1();
    CHECK(check_comodule(*ax1.coaction).passed());
    CHECK(check_comodule_coalgebra(*ax1.coaction).passed());

    for (const auto& e : {catalog_cyclic(3), catalog_sweedler_hom()}) {
        const auto& H = e.hopf.bialgebra();
        CHECK(check_comodule(trivial_coaction(H, H)).passed());
        CHECK(check_comodule_coalgebra(trivial_coaction(H, H)).passed());
        ComoduleCoaction co = self_coaction(e.hopf);
        CHECK(check_comodule(co).passed());
        CHECK(check_comodule_coalgebra(co).passed());
    }

    Tensor3 co = ax1.coaction->coact;
    co(1, 1, 1) = 1;  // rho(g) = g (x) (1 + x)
    CHECK_FALSE(check_comodule(ComoduleCoaction(ax1.coaction->coactor, ax1.coaction->carrier, co)).passed());
}

TEST_CASE("cotwisting maps") {
    const auto c2 = catalog_classical_cyclic(2).hopf;
    CHECK(check_cotwisting(c2.coalgebra(), c2.coalgebra(), flip_matrix(2, 2)).passed());
    const auto ax1 = catalog_ax1();
    CHECK(check_cotwisting(ax1.hopf.coalgebra(), ax1.partner->coalgebra(), comodule_cotwist(*ax1.coaction)).passed());
}

TEST_CASE("twisting maps and matched pairs") {
    const auto c2 = catalog_classical_cyclic(2).hopf;
    CHECK(check_twisting(c2.algebra(), c2.algebra(), flip_matrix(2, 2)).passed());

    PairingForm P = evaluation_pairing(catalog_ax1().hopf);
    DualPairDouble d = dual_pair_double(P, BuildOptions{true});
    CHECK(check_twisting(P.left.algebra(), P.right.algebra(), d.twisting).passed());
    Matrix T = d.twisting;
    T(1, 1) += 1;
    CHECK_FALSE(check_twisting(P.left.algebra(), P.right.algebra(), T).passed());

    const auto ax1 = catalog_ax1();
    MatchedPairData mp = dual_matched_pair(ax1.hopf, *ax1.partner, *ax1.action, *ax1.coaction);
    CHECK(check_matched_pair(mp).passed());
    Tensor3 right = mp.right_action;
    right(1, 1, 1) += 1;
    CheckReport r = check_matched_pair(MatchedPairData(mp.A, mp.H, mp.left_action, right));
    CHECK_FALSE(r.passed());

    // trivial actions on cocommutative inputs with alpha = id
    const auto& A = c2;
    Tensor3 left(2, 2, 2), ra(2, 2, 2);
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t a = 0; a < 2; ++a) {
            left(h, a, a) = A.counit()[h];
            ra(h, a, h) = A.counit()[a];
        }
    CHECK(check_matched_pair(MatchedPairData(A, A, left, ra)).passed());
}

TEST_CASE("dual pairs") {
    CHECK(check_dual_pair(evaluation_pairing(catalog_ax1().hopf)).passed());
    CHECK(check_dual_pair(evaluation_pairing(catalog_cyclic(2).hopf)).passed());
    CHECK(check_dual_pair(evaluation_pairing(catalog_onedim().hopf)).passed());

    PairingForm P = evaluation_pairing(catalog_ax1().hopf);
    Matrix g = P.gram;
    g(0, 1) = 1;
    CheckReport r = check_dual_pair(PairingForm(P.left, P.right, g));
    CHECK_FALSE(r.passed());
    CHECK(has_failure(r, "dual_pair.product_left"));
}

TEST_CASE("two-cocycles") {
    const auto c3 = catalog_cyclic(3).hopf;
    const Matrix eps = Matrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    CHECK(check_cocycle(TwoCocycle(c3.bialgebra(), eps, Side::left)).passed());
    CHECK(check_cocycle(TwoCocycle(c3.bialgebra(), eps, Side::right)).passed());

    CanonicalCocycles cc = canonical_cocycles(catalog_ax1().hopf);
    CHECK(check_cocycle(cc.sigma).passed());
    CHECK(check_cocycle(cc.eta).passed());
    CHECK(cc.sigma.side == Side::left);
    CHECK(cc.eta.side == Side::right);

    Matrix bad = cc.sigma.gram;
    bad(0, 0) = 2;
    CHECK_FALSE(check_cocycle(TwoCocycle(cc.sigma.algebra, bad, Side::left)).passed());
}

TEST_CASE("quasitriangular structures") {
    const auto sw = catalog_sweedler_hom();
    CHECK(check_quasitriangular(sw.hopf.bialgebra(), *sw.rmatrix).passed());

    Matrix R = sw.rmatrix->entries;
    R(1, 1) = Scalar(1, 2);
    CheckReport r = check_quasitriangular(sw.hopf.bialgebra(), RMatrix(sw.hopf.bialgebra(), R));
    const CheckEntry* e = r.find("quasitriangular.intertwines");
    REQUIRE(e);
    CHECK_FALSE(e->passed);
    CHECK(e->witness->index == std::vector<std::size_t>{2});

    // R = 1 (x) 1 on a cocommutative algebra with alpha = id
    const auto c3 = catalog_classical_cyclic(3).hopf;
    Matrix one(3, 3);
    one(0, 0) = 1;
    CHECK(check_quasitriangular(c3.bialgebra(), RMatrix(c3.bialgebra(), one)).passed());
}

TEST_CASE("comodule algebras") {
    const auto c2 = catalog_cyclic(2).hopf.bialgebra();
    ComoduleCoaction triv = trivial_coaction(c2, c2);
    CHECK(check_comodule_algebra(c2.algebra(), triv).passed());
}

TEST_CASE("reports are deterministic and independent of the worker count") {
    const auto ax1 = catalog_ax1().hopf;
    Tensor3 mul = ax1.mul();
    mul(1, 1, 0) = 1;
    HomAlgebra broken(mul, ax1.unit(), ax1.alpha());
    set_sweep_jobs(1);
    const CheckReport a = check_hom_algebra(broken);
    const std::string sa = a.summary();
    const CheckReport b = check_hom_algebra(broken);
    set_sweep_jobs(4);
    const CheckReport c = check_hom_algebra(broken);
    const CheckReport d = check_hopf_suite(catalog_sweedler_hom().hopf);
    set_sweep_jobs(1);
    CHECK(sa == b.summary());
    CHECK(sa == c.summary());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].id == c.checks[i].id);
        CHECK(a.checks[i].passed == c.checks[i].passed);
        CHECK(bool(a.checks[i].witness) == bool(c.checks[i].witness));
        if (a.checks[i].witness) {
            CHECK(a.checks[i].witness->index == c.checks[i].witness->index);
            CHECK(a.checks[i].witness->lhs == c.checks[i].witness->lhs);
        }
    }
    CHECK(d.summary() == check_hopf_suite(catalog_sweedler_hom().hopf).summary());
}

TEST_CASE("structural invariants are enforced at construction") {
    CHECK_THROWS_AS(HomAlgebra(Tensor3(2, 2, 2), Vector(2), Matrix(2, 2)), Singular);
    CHECK_THROWS_AS(HomAlgebra(Tensor3(2, 2, 2), Vector(3), Matrix::identity(2)), DimensionMismatch);
    const auto ax1 = catalog_ax1().hopf;
    CHECK_THROWS_AS(HomBialgebra(ax1.algebra(), HomCoalgebra(ax1.comul(), ax1.counit(), Matrix::identity(2))),
                    DimensionMismatch);
}

TEST_CASE("every catalog entry passes the axiom chain") {
    for (const auto& e : {catalog_sweedler_hom(), catalog_cyclic(2), catalog_cyclic(3), catalog_cyclic(5),
                          catalog_classical_cyclic(2), catalog_s3(), catalog_onedim()}) {
        CAPTURE(e.name);
        const CheckReport r = check_hopf_suite(e.hopf);
        CHECK(r.passed());
        CHECK(check_hopf_suite(dual(e.hopf)).passed());
    }
}
