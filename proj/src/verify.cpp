#include "homhopf/verify.hpp"

#include <chrono>
#include <sstream>

#include "homhopf/constructions.hpp"

namespace homhopf {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckReport single(CheckEntry e) {
    CheckReport r;
    r.add(std::move(e));
    return r;
}

CheckReport checked(CheckReport r, const std::string& note) {
    r.notes.push_back(note);
    return r;
}

}  // namespace

bool SuiteResult::passed() const {
    for (const auto& s : steps)
        if (!s.report.passed()) return false;
    return true;
}

const SuiteStep* SuiteResult::step(const std::string& name) const {
    for (const auto& s : steps)
        if (s.name == name) return &s;
    return nullptr;
}

std::string SuiteResult::summary() const {
    std::ostringstream os;
    os << "suite " << suite << " on " << subject << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& s : steps) {
        os << "[" << (s.report.passed() ? "pass" : "FAIL") << "] " << s.name << "\n";
        std::istringstream lines(s.report.summary());
        for (std::string line; std::getline(lines, line);)
            if (!line.empty()) os << "  " << line << "\n";
    }
    for (const auto& n : notes) os << "note: " << n << "\n";
    return os.str();
}

CheckEntry compare_tensors(const std::string& id, const Tensor3& lhs, const Tensor3& rhs) {
    if (lhs.dim1() != rhs.dim1() || lhs.dim2() != rhs.dim2() || lhs.dim3() != rhs.dim3())
        throw DimensionMismatch(id + ": tensors of different shapes");
    return sweep(id, {lhs.dim1(), lhs.dim2()}, [&](const auto& i) {
        return std::pair{Tensor::from_vector(lhs.slice(i[0], i[1])), Tensor::from_vector(rhs.slice(i[0], i[1]))};
    });
}

CheckEntry compare_matrices(const std::string& id, const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw DimensionMismatch(id + ": matrices of different shapes");
    return sweep(id, {lhs.rows()}, [&](const auto& i) {
        return std::pair{Tensor::from_vector(lhs.row(i[0])), Tensor::from_vector(rhs.row(i[0]))};
    });
}

SuiteResult verify_thm_2_6(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ModuleAction& act,
                           const ComoduleCoaction& co, const Ex27Expected* golden) {
    Stopwatch clock;
    SuiteResult out{"thm2.6", "", {}, {}, 0};
    CheckReport pre = check_module_algebra(act);
    pre.append(check_comodule_coalgebra(co));
    out.steps.push_back({"module_algebra_and_comodule_coalgebra", std::move(pre)});
    out.steps.push_back({"hypotheses", bicrossproduct_hypotheses(A, H, act, co)});

    HomHopfAlgebra B = bicrossproduct(A, H, act, co, BuildOptions{true});
    out.steps.push_back({"bicrossproduct_hopf_suite", check_hopf_suite(B)});
    if (golden) {
        CheckReport g;
        g.add(compare_tensors("golden.product", B.mul(), golden->mul));
        g.add(compare_tensors("golden.coproduct", B.comul(), golden->comul));
        g.add(compare_matrices("golden.antipode", B.antipode(), golden->antipode));
        out.steps.push_back({"golden_tables", std::move(g)});
    }
    out.wall_ms = clock.ms();
    return out;
}

SuiteResult verify_cor_2_9(const HomHopfAlgebra& H, const GroupData* group) {
    Stopwatch clock;
    SuiteResult out{"cor2.9", "", {}, {}, 0};
    const std::size_t n = H.dim();
    SelfBicross sb = self_bicross(H, BuildOptions{true});
    out.steps.push_back({"action_module_algebra", check_module_algebra(self_action(H))});
    out.steps.push_back({"coaction_comodule_coalgebra", check_comodule_coalgebra(self_coaction(H))});
    out.steps.push_back(
        {"hypotheses", bicrossproduct_hypotheses(H, opposite_hopf(H), self_action(H), self_coaction(H))});
    out.steps.push_back({"closed_form_cross_check", sb.cross_check});
    out.steps.push_back({"hopf_suite", check_hopf_suite(sb.hopf)});
    if (group) {
        const auto& t = group->table;
        const auto& phi = group->phi;
        std::vector<std::size_t> inv(n);
        std::size_t e = 0;
        while (t[e][0] != 0) ++e;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (t[a][b] == e) inv[a] = b;
        // (a x h)(b x k) = phi(a h^-1 b h) x phi(k h)
        CheckReport g;
        g.add(sweep("group_like.product", {n, n, n, n}, [&](const auto& i) {
            const std::size_t a = i[0], h = i[1], b = i[2], k = i[3];
            Tensor lhs = Tensor::from_vector(sb.hopf.mul().slice(a * n + h, b * n + k));
            const std::size_t left = phi[t[t[t[a][inv[h]]][b]][h]];
            const std::size_t right = phi[t[k][h]];
            return std::pair{lhs, Tensor::basis({n * n}, {left * n + right})};
        }));
        out.steps.push_back({"group_like_closed_form", std::move(g)});
    }
    out.wall_ms = clock.ms();
    return out;
}

SuiteResult verify_prop_2_19(const HomHopfAlgebra& H, std::optional<std::size_t> cyclic_order) {
    Stopwatch clock;
    SuiteResult out{"prop2.19", "", {}, {}, 0};
    HomHopfAlgebra D = drinfeld_double(H);
    RMatrix R = canonical_r_matrix(H);
    out.steps.push_back({"double_hopf_suite", check_hopf_suite(D)});
    out.steps.push_back({"quasitriangular", check_quasitriangular(D.bialgebra(), R)});
    if (cyclic_order) {
        const std::size_t n = *cyclic_order;
        CheckReport c;
        c.add(compare_tensors("closed_form.double_product", D.mul(), cyclic_double_product(n)));
        c.add(compare_matrices("closed_form.r_matrix", R.entries, cyclic_r_matrix(n)));
        out.steps.push_back({"closed_forms", std::move(c)});
    }
    out.wall_ms = clock.ms();
    return out;
}

SuiteResult verify_thm_4_5(const HomHopfAlgebra& A, std::optional<std::size_t> cyclic_order) {
    Stopwatch clock;
    SuiteResult out{"thm4.5", "", {}, {}, 0};
    CanonicalCocycles cc = canonical_cocycles(A);
    out.steps.push_back({"sigma_left_cocycle", check_cocycle(cc.sigma)});
    out.steps.push_back({"eta_right_cocycle", check_cocycle(cc.eta)});

    HomAlgebra left = cocycle_twist(cc.sigma.algebra, cc.sigma, BuildOptions{true});
    HomAlgebra heis_op = heisenberg_double(opposite(A));
    out.steps.push_back({"left_twist_algebra", check_hom_algebra(left)});
    out.steps.push_back({"heisenberg_op_algebra", check_hom_algebra(heis_op)});
    out.steps.push_back(
        {"left_twist_equals_heisenberg_op",
         checked(single(compare_tensors("thm4_5.left_twist_vs_heisenberg_op", left.mul(), heis_op.mul())),
                 "identification: identity on A^op (x) A* = A^op (x) (A^op)*")});

    HomAlgebra right = cocycle_twist(cc.eta.algebra, cc.eta, BuildOptions{true});
    HomAlgebra heis_dual = heisenberg_double(dual(A));
    out.steps.push_back({"right_twist_algebra", check_hom_algebra(right)});
    out.steps.push_back({"heisenberg_dual_algebra", check_hom_algebra(heis_dual)});
    out.steps.push_back(
        {"right_twist_equals_heisenberg_dual",
         checked(single(compare_tensors("thm4_5.right_twist_vs_heisenberg_dual", right.mul(), heis_dual.mul())),
                 "identification: identity on (A^op)* (x) A = A* (x) A**")});

    if (cyclic_order) {
        const std::size_t n = *cyclic_order;
        CheckReport c;
        c.add(compare_matrices("closed_form.sigma", cc.sigma.gram, cyclic_sigma(n)));
        c.add(compare_tensors("closed_form.twisted_product", left.mul(), cyclic_heisenberg_product(n)));
        out.steps.push_back({"closed_forms", std::move(c)});
    }
    out.wall_ms = clock.ms();
    return out;
}

SuiteResult verify_dual_pair_route(const HomHopfAlgebra& H) {
    Stopwatch clock;
    SuiteResult out{"dual-pair", "", {}, {}, 0};
    PairingForm P = evaluation_pairing(H);
    out.steps.push_back({"dual_pair", check_dual_pair(P)});
    DualPairDouble dp = dual_pair_double(P, BuildOptions{true});
    out.steps.push_back({"twisting_map", check_twisting(P.left.algebra(), P.right.algebra(), dp.twisting)});
    out.steps.push_back({"double_hopf_suite", check_hopf_suite(dp.hopf)});
    out.steps.push_back({"embeddings", dp.report});

    HomHopfAlgebra D = drinfeld_double(H);
    CheckReport cmp;
    cmp.add(compare_tensors("compare.product", dp.hopf.mul(), D.mul()));
    cmp.add(compare_tensors("compare.coproduct", dp.hopf.comul(), D.comul()));
    cmp.add(compare_matrices("compare.antipode", dp.hopf.antipode(), D.antipode()));
    cmp.add(compare_matrices("compare.alpha", dp.hopf.alpha(), D.alpha()));
    cmp.notes.push_back("identification: identity on H^op (x) (H^op)* = H^op (x) H*");
    out.steps.push_back({"compare_drinfeld_double", std::move(cmp)});
    out.wall_ms = clock.ms();
    return out;
}

SuiteResult verify_prop_4_7(const HomHopfAlgebra& A) {
    Stopwatch clock;
    SuiteResult out{"prop4.7", "", {}, {}, 0};
    CanonicalCocycles cc = canonical_cocycles(A);

    const HomBialgebra& D = cc.sigma.algebra;
    HomAlgebra left = cocycle_twist(D, cc.sigma, BuildOptions{true});
    ComoduleCoaction rho(D, HomBialgebra(left, D.coalgebra()), D.comul());
    out.steps.push_back({"right_comodule_algebra", check_comodule_algebra(left, rho)});

    const HomBialgebra& Dt = cc.eta.algebra;
    HomAlgebra right = cocycle_twist(Dt, cc.eta, BuildOptions{true});
    LeftComoduleCoaction lambda(Dt, HomBialgebra(right, Dt.coalgebra()), Dt.comul());
    out.steps.push_back(
        {"left_comodule_algebra",
         checked(check_left_comodule_algebra(right, lambda),
                 "left comodule Hom-algebra read as the mirror: lambda(ab) = a(-1)b(-1) (x) a(0)b(0), "
                 "lambda(1) = 1 (x) 1")});
    out.wall_ms = clock.ms();
    return out;
}

std::vector<std::string> suite_names() { return {"thm2.6", "cor2.9", "prop2.19", "thm4.5", "dual-pair", "prop4.7"}; }

std::optional<std::size_t> cyclic_order_of(const CatalogEntry& entry) {
    const std::string prefix = "cyclic:";
    if (entry.name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
        std::size_t n = std::stoul(entry.name.substr(prefix.size()));
        if (n >= 2 && entry.hopf.dim() == n) return n;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

SuiteResult run_suite(const std::string& suite, const CatalogEntry& entry) {
    SuiteResult r;
    if (suite == "thm2.6") {
        if (!entry.partner || !entry.action || !entry.coaction)
            throw InvalidParameter("suite thm2.6 needs an entry with partner, action and coaction blocks");
        std::optional<Ex27Expected> golden;
        if (entry.name == "ax1") golden = catalog_ex27_expected();
        r = verify_thm_2_6(entry.hopf, *entry.partner, *entry.action, *entry.coaction, golden ? &*golden : nullptr);
    } else if (suite == "cor2.9") {
        r = verify_cor_2_9(entry.hopf, entry.group ? &*entry.group : nullptr);
    } else if (suite == "prop2.19") {
        r = verify_prop_2_19(entry.hopf, cyclic_order_of(entry));
    } else if (suite == "thm4.5") {
        r = verify_thm_4_5(entry.hopf, cyclic_order_of(entry));
    } else if (suite == "dual-pair") {
        r = verify_dual_pair_route(entry.hopf);
    } else if (suite == "prop4.7") {
        r = verify_prop_4_7(entry.hopf);
    } else {
        throw InvalidParameter("unknown suite '" + suite + "'");
    }
    r.subject = entry.name;
    return r;
}

}  // namespace homhopf
