#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homhopf/catalog.hpp"
#include "homhopf/report.hpp"
#include "homhopf/verify.hpp"

using namespace homhopf;

namespace {

bool step_passed(const SuiteResult& r, const std::string& name) {
    const SuiteStep* s = r.step(name);
    return s && s->report.passed();
}

}  // namespace

TEST_CASE("entrywise comparisons report the first differing slice") {
    Tensor3 a(2, 2, 2), b(2, 2, 2);
    CHECK(compare_tensors("same", a, b).passed);
    b(1, 0, 1) = 3;
    const CheckEntry c = compare_tensors("diff", a, b);
    CHECK_FALSE(c.passed);
    REQUIRE(c.witness);
    CHECK(c.witness->index == std::vector<std::size_t>{1, 0});
    CHECK(c.witness->rhs == Vector{0, 3});
    const CheckEntry m = compare_matrices("rows", Matrix::identity(3), Matrix(3, 3));
    CHECK(m.witness->index == std::vector<std::size_t>{0});
}

TEST_CASE("bicrossproduct suite on the bundled datum") {
    const SuiteResult r = run_suite("thm2.6", catalog_ax1());
    CHECK(step_passed(r, "module_algebra_and_comodule_coalgebra"));
    CHECK(step_passed(r, "hypotheses"));
    const SuiteStep* golden = r.step("golden_tables");
    REQUIRE(golden);
    CHECK(golden->report.find("golden.product")->passed);
    CHECK(golden->report.find("golden.antipode")->passed);
    // the printed coproduct of x#g carries the opposite sign on its first term
    const CheckEntry* co = golden->report.find("golden.coproduct");
    CHECK_FALSE(co->passed);
    CHECK(co->witness->index == std::vector<std::size_t>{3, 1});
    CHECK_THROWS_AS(run_suite("thm2.6", catalog_sweedler_hom()), InvalidParameter);
}

TEST_CASE("bicrossproduct suite rejects a broken action") {
    auto entry = catalog_ax1();
    Tensor3 act = entry.action->act;
    act(1, 0, 0) = 0;
    act(1, 0, 1) = 1;  // g . 1 = x
    entry.action = ModuleAction(entry.action->actor, entry.action->carrier, act);
    const SuiteResult r = run_suite("thm2.6", entry);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(step_passed(r, "module_algebra_and_comodule_coalgebra"));
}

TEST_CASE("self bicrossproduct suite") {
    for (const auto& entry : {catalog_sweedler_hom(), catalog_cyclic(3), catalog_s3()}) {
        CAPTURE(entry.name);
        CHECK(run_suite("cor2.9", entry).passed());
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        const SuiteResult r = run_suite("cor2.9", catalog_cyclic(n));
        CHECK(step_passed(r, "group_like_closed_form"));
    }
}

TEST_CASE("quasitriangular double suite") {
    CHECK(run_suite("prop2.19", catalog_sweedler_hom()).passed());
    for (std::size_t n = 2; n <= 4; ++n) {
        const SuiteResult r = run_suite("prop2.19", catalog_cyclic(n));
        CHECK(r.passed());
        CHECK(step_passed(r, "closed_forms"));
    }
}

TEST_CASE("cocycle twist suite") {
    for (const auto& entry : {catalog_sweedler_hom(), catalog_cyclic(2), catalog_cyclic(3)}) {
        CAPTURE(entry.name);
        const SuiteResult r = run_suite("thm4.5", entry);
        CHECK(r.passed());
    }
    // on ax1 the identifications hold, but the non-multiplicative coproduct
    // breaks Hom-associativity on both sides
    const SuiteResult a = run_suite("thm4.5", catalog_ax1());
    CHECK(step_passed(a, "sigma_left_cocycle"));
    CHECK(step_passed(a, "eta_right_cocycle"));
    CHECK(step_passed(a, "left_twist_equals_heisenberg_op"));
    CHECK(step_passed(a, "right_twist_equals_heisenberg_dual"));
    CHECK_FALSE(step_passed(a, "heisenberg_op_algebra"));
    CHECK_FALSE(step_passed(a, "heisenberg_dual_algebra"));
    CHECK(run_suite("thm4.5", catalog_cyclic(3)).step("closed_forms"));
}

TEST_CASE("dual pair suite") {
    const SuiteResult c2 = run_suite("dual-pair", catalog_cyclic(2));
    CHECK(c2.passed());
    const SuiteResult a = run_suite("dual-pair", catalog_ax1());
    CHECK(step_passed(a, "dual_pair"));
    CHECK(step_passed(a, "embeddings"));
    CHECK(step_passed(a, "compare_drinfeld_double"));
    // the double inherits the failing comultiplicativity of its input
    CHECK_FALSE(step_passed(a, "double_hopf_suite"));
}

TEST_CASE("comodule algebra suite") {
    CHECK(run_suite("prop4.7", catalog_cyclic(2)).passed());
    CHECK(run_suite("prop4.7", catalog_sweedler_hom()).passed());
    const SuiteResult a = run_suite("prop4.7", catalog_ax1());
    CHECK_FALSE(step_passed(a, "right_comodule_algebra"));
}

TEST_CASE("suite results serialize deterministically") {
    const SuiteResult r1 = run_suite("prop2.19", catalog_cyclic(2));
    const SuiteResult r2 = run_suite("prop2.19", catalog_cyclic(2));
    Json j1 = suite_json(r1), j2 = suite_json(r2);
    CHECK(j1["suite"] == "prop2.19");
    CHECK(j1["subject"] == "cyclic:2");
    CHECK(report_digest(j1) == report_digest(j2));
    ReportDocument d1{"homhopf verify", {{"cyclic:2", "x"}}, {j1}, 0};
    ReportDocument d2{"homhopf verify", {{"cyclic:2", "x"}}, {j2}, 0};
    CHECK(d1.to_json()["digest"] == d2.to_json()["digest"]);
    CHECK_THROWS_AS(run_suite("nope", catalog_cyclic(2)), InvalidParameter);
    CHECK(cyclic_order_of(catalog_cyclic(5)) == std::optional<std::size_t>(5));
    CHECK_FALSE(cyclic_order_of(catalog_s3()));
}
