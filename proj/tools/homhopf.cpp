// homhopf: check, construct, verify and export finite-dimensional Hom-Hopf
// algebras. Exit status 0 = every check passed, 1 = a check or construction
// precondition failed, 2 = input or usage error.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "homhopf/constructions.hpp"
#include "homhopf/format.hpp"
#include "homhopf/report.hpp"
#include "homhopf/verify.hpp"

using namespace homhopf;

namespace {

enum Exit : int { kPass = 0, kFail = 1, kInputError = 2 };

struct Session {
    std::string command;
    std::string report_path;
    std::vector<ReportInput> inputs;
    std::vector<Json> results;

    AlgebraFile load(const std::string& source) {
        AlgebraFile f = load_algebra(source);
        inputs.push_back({source, sha256_hex(serialize_algebra_file(f))});
        return f;
    }

    int finish(int status) {
        if (!report_path.empty()) {
            ReportDocument doc{command, inputs, results, status};
            write_text_file(report_path, doc.to_json().dump(2) + "\n");
        }
        return status;
    }
};

std::string vector_text(const Vector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_scalar(v[i]);
    return s + "]";
}

void print_witnesses(std::ostream& os, const CheckReport& r) {
    for (const auto& e : r.checks) {
        if (e.passed || !e.witness) continue;
        os << "  witness " << e.id << ": lhs " << vector_text(e.witness->lhs) << ", rhs "
           << vector_text(e.witness->rhs) << "\n";
    }
}

void print_report(std::ostream& os, const CheckReport& r) {
    os << r.summary();
    print_witnesses(os, r);
}

std::string star(const std::string& s) { return s + "*"; }

std::vector<std::string> starred(const std::vector<std::string>& b) {
    std::vector<std::string> out;
    for (const auto& s : b) out.push_back(star(s));
    return out;
}

std::vector<std::string> pair_labels(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                     const std::string& sep = "|") {
    std::vector<std::string> out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + sep + y);
    return out;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    std::string input;
    std::string level;
};

int cmd_check(Session& s, const CheckArgs& a) {
    AlgebraFile f = s.load(a.input);
    std::string level = a.level;
    if (level.empty()) level = f.has_antipode() ? "hopf" : f.has_coalgebra() ? "bialgebra" : "algebra";

    CheckReport r;
    if (level == "algebra") {
        r = check_hom_algebra(f.algebra());
    } else if (level == "coalgebra") {
        r = check_hom_coalgebra(f.bialgebra().coalgebra());
    } else if (level == "bialgebra") {
        r = check_bialgebra_suite(f.bialgebra());
    } else if (level == "hopf") {
        r = check_hopf_suite(f.hopf());
    } else {
        if (!f.rmatrix) throw InvalidParameter("'" + f.name + "' has no rmatrix block");
        HomBialgebra B = f.bialgebra();
        r = f.has_antipode() ? check_hopf_suite(f.hopf()) : check_bialgebra_suite(B);
        r.append(check_quasitriangular(B, RMatrix(B, *f.rmatrix)));
    }

    std::cout << "check " << level << " " << f.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    print_report(std::cout, r);
    Json j{{"kind", "check"}, {"subject", f.name}, {"level", level}};
    const Json body = check_report_json(r);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    s.results.push_back(std::move(j));
    return r.passed() ? kPass : kFail;
}

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    std::string input;
    std::string out;
    std::string cocycle;
    std::string side;
    bool force = false;
};

const std::vector<std::string> kConstructKinds = {"dual",  "op",         "double",           "double-tilde",
                                                  "heisenberg", "bicross", "self-bicross", "dual-pair-double",
                                                  "twist", "sigma",      "eta"};

AlgebraFile build(Session& s, const ConstructArgs& a, CheckReport& notes) {
    const BuildOptions opts{a.force};
    AlgebraFile in = s.load(a.input);
    const std::string name = a.kind + "(" + in.name + ")";
    const auto& b = in.basis;

    if (a.kind == "dual") return file_from_hopf(name, dual(in.hopf()), starred(b));
    if (a.kind == "op") return file_from_hopf(name, opposite(in.hopf()), b);
    if (a.kind == "double") {
        HomHopfAlgebra H = in.hopf();
        AlgebraFile f = file_from_hopf(name, drinfeld_double(H), pair_labels(b, starred(b)));
        f.rmatrix = canonical_r_matrix(H).entries;
        return f;
    }
    if (a.kind == "double-tilde")
        return file_from_bialgebra(name, drinfeld_double_tilde(in.hopf()), pair_labels(starred(b), b));
    if (a.kind == "heisenberg") return file_from_algebra(name, heisenberg_double(in.hopf()), pair_labels(b, starred(b)));
    if (a.kind == "sigma" || a.kind == "eta") {
        HomHopfAlgebra A = in.hopf();
        CanonicalCocycles cc = canonical_cocycles(A);
        const TwoCocycle& c = a.kind == "sigma" ? cc.sigma : cc.eta;
        if (!a.force) {
            CheckReport r = check_cocycle(c);
            if (!r.passed()) throw PreconditionFailed("canonical cocycle fails the cocycle conditions", r);
        }
        AlgebraFile f = a.kind == "sigma" ? file_from_hopf(name, drinfeld_double(A), pair_labels(b, starred(b)))
                                          : file_from_bialgebra(name, c.algebra, pair_labels(starred(b), b));
        f.cocycle = c.gram;
        f.cocycle_side = c.side;
        return f;
    }
    if (a.kind == "bicross") {
        if (!in.partner || !in.action || !in.coaction)
            throw InvalidParameter("'" + in.name + "' has no partner with action and coaction blocks");
        CatalogEntry e = entry_from_file(in);
        return file_from_hopf(name, bicrossproduct(e.hopf, *e.partner, *e.action, *e.coaction, opts),
                              pair_labels(b, in.partner->basis, "#"));
    }
    if (a.kind == "self-bicross") {
        SelfBicross sb = self_bicross(in.hopf(), opts);
        notes.append(sb.cross_check);
        return file_from_hopf(name, sb.hopf, pair_labels(b, b, "#"));
    }
    if (a.kind == "dual-pair-double") {
        std::optional<PairingForm> P;
        std::vector<std::string> labels;
        if (in.partner && in.pairing) {
            P.emplace(in.hopf(), in.partner->hopf(), *in.pairing);
            labels = pair_labels(b, in.partner->basis);
        } else {
            P.emplace(evaluation_pairing(in.hopf()));
            labels = pair_labels(b, starred(b));
        }
        DualPairDouble d = dual_pair_double(*P, opts);
        notes.append(d.report);
        return file_from_hopf(name, d.hopf, labels);
    }
    if (a.kind == "twist") {
        HomBialgebra B = in.bialgebra();
        AlgebraFile source = a.cocycle.empty() ? in : s.load(a.cocycle);
        if (!source.cocycle) throw InvalidParameter("'" + source.name + "' has no cocycle block");
        Side side = source.cocycle_side.value_or(Side::left);
        if (!a.side.empty()) side = parse_side(a.side);
        TwoCocycle sigma(B, *source.cocycle, side);
        return file_from_algebra(name, cocycle_twist(B, sigma, opts), b);
    }
    throw InvalidParameter("unknown construction '" + a.kind + "'");
}

int cmd_construct(Session& s, const ConstructArgs& a) {
    Json j{{"kind", "construct"}, {"construction", a.kind}};
    CheckReport notes;
    try {
        AlgebraFile f = build(s, a, notes);
        const std::string text = serialize_algebra_file(f);
        if (a.out.empty() || a.out == "-")
            std::cout << text;
        else
            write_text_file(a.out, text);
        std::cerr << "constructed " << f.name << " (dim " << f.dim() << ")" << (a.force ? " without validation" : "")
                  << "\n";
        if (!notes.checks.empty() || !notes.notes.empty()) print_report(std::cerr, notes);
        j["passed"] = true;
        j["output"] = a.out.empty() ? "-" : a.out;
        j["dim"] = f.dim();
        j["sha256"] = sha256_hex(text);
        if (!notes.checks.empty() || !notes.notes.empty()) j["report"] = check_report_json(notes);
        s.results.push_back(std::move(j));
        return kPass;
    } catch (const PreconditionFailed& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        print_report(std::cerr, e.report);
        j["passed"] = false;
        j["error"] = e.what();
        j["report"] = check_report_json(e.report);
    } catch (const HypothesisFailed& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        print_report(std::cerr, e.report);
        j["passed"] = false;
        j["error"] = e.what();
        j["report"] = check_report_json(e.report);
    } catch (const CrossCheckFailed& e) {
        std::cerr << "cross-check failed: " << e.what() << "\n";
        j["passed"] = false;
        j["error"] = e.what();
    } catch (const NotAMorphism& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        j["passed"] = false;
        j["error"] = e.what();
    }
    s.results.push_back(std::move(j));
    return kFail;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(Session& s, const std::string& suite, const std::string& source) {
    AlgebraFile f = s.load(source);
    CatalogEntry e = [&] {
        // Catalog names keep their bundled group data.
        try {
            if (f == file_from_entry(catalog_lookup(source))) return catalog_lookup(source);
        } catch (const InvalidParameter&) {
        }
        return entry_from_file(f);
    }();
    SuiteResult r = run_suite(suite, e);
    std::cout << r.summary();
    for (const auto& st : r.steps) print_witnesses(std::cout, st.report);
    s.results.push_back(suite_json(r));
    return r.passed() ? kPass : kFail;
}

// ---- export -----------------------------------------------------------------

int cmd_export(Session& s, const std::string& name, const std::string& out) {
    AlgebraFile f = s.load(name);
    const std::string text = serialize_algebra_file(f);
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_text_file(out, text);
    s.results.push_back(Json{{"kind", "export"}, {"passed", true}, {"output", out.empty() ? "-" : out},
                             {"sha256", sha256_hex(text)}});
    return kPass;
}

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks and constructions for finite-dimensional Hom-Hopf algebras"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Session session;
    unsigned jobs = 1;
    app.add_option("--report", session.report_path, "Write a JSON report document to this path");
    app.add_option("--jobs", jobs, "Worker threads for basis sweeps")->check(CLI::Range(1u, 256u));

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Check the axioms of an algebra file or catalog entry");
    c->add_option("input", check.input, "File path or catalog name (name or name:param)")->required();
    c->add_option("--level", check.level, "algebra|coalgebra|bialgebra|hopf|quasitriangular")
        ->check(CLI::IsMember({"algebra", "coalgebra", "bialgebra", "hopf", "quasitriangular"}));

    ConstructArgs construct;
    auto* k = app.add_subcommand("construct", "Build a derived object and write it in the file format");
    k->add_option("kind", construct.kind, join(kConstructKinds))->required()->check(CLI::IsMember(kConstructKinds));
    k->add_option("input", construct.input, "File path or catalog name")->required();
    k->add_option("--out", construct.out, "Output path (default: standard output)");
    k->add_option("--cocycle", construct.cocycle, "File carrying the cocycle block for twist");
    k->add_option("--side", construct.side, "Cocycle side for twist")->check(CLI::IsMember({"left", "right"}));
    k->add_flag("--force", construct.force, "Skip precondition checks");

    std::string suite, suite_input;
    auto* v = app.add_subcommand("verify", "Run a theorem-level verification suite");
    v->add_option("suite", suite, join(suite_names()))->required()->check(CLI::IsMember(suite_names()));
    v->add_option("--algebra", suite_input, "File path or catalog name")->required();

    std::string export_name, export_out;
    auto* x = app.add_subcommand("export", "Write a catalog entry in the file format");
    x->add_option("name", export_name, "Catalog name (" + join(catalog_names()) + ")")->required();
    x->add_option("--out", export_out, "Output path (default: standard output)");

    auto* l = app.add_subcommand("list", "List catalog entries and suites");

    for (auto* sub : {c, k, v, x, l}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    set_sweep_jobs(jobs);
    session.command = "homhopf";
    for (int i = 1; i < argc; ++i) session.command += " " + std::string(argv[i]);

    try {
        if (*c) return session.finish(cmd_check(session, check));
        if (*k) return session.finish(cmd_construct(session, construct));
        if (*v) return session.finish(cmd_verify(session, suite, suite_input));
        if (*x) return session.finish(cmd_export(session, export_name, export_out));
        std::cout << "catalog: " << join(catalog_names()) << "\nsuites: " << join(suite_names()) << "\n";
        return kPass;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        session.results.push_back(Json{{"kind", "error"}, {"passed", false}, {"error", e.what()}});
        try {
            return session.finish(kInputError);
        } catch (const Error& w) {
            std::cerr << "error: " << w.what() << "\n";
            return kInputError;
        }
    }
}
