#include "homhopf/report.hpp"

#include "homhopf/format.hpp"

namespace homhopf {

namespace {

Json scalars(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(format_scalar(x));
    return a;
}

Json without_timing(const Json& j) {
    if (j.is_object()) {
        Json out = Json::object();
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "wall_ms" && it.key() != "digest") out[it.key()] = without_timing(it.value());
        return out;
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& x : j) out.push_back(without_timing(x));
        return out;
    }
    return j;
}

}  // namespace

Json witness_json(const Witness& w) {
    return Json{{"index", w.index}, {"lhs", scalars(w.lhs)}, {"rhs", scalars(w.rhs)}};
}

Json check_report_json(const CheckReport& r) {
    Json checks = Json::array();
    for (const auto& e : r.checks) {
        Json c{{"id", e.id}, {"passed", e.passed}};
        if (e.witness) c["witness"] = witness_json(*e.witness);
        checks.push_back(std::move(c));
    }
    return Json{{"passed", r.passed()}, {"failures", r.failures()}, {"checks", checks}, {"notes", r.notes}};
}

Json suite_json(const SuiteResult& s) {
    Json steps = Json::array();
    for (const auto& st : s.steps) {
        Json j{{"name", st.name}};
        const Json body = check_report_json(st.report);
        for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
        steps.push_back(std::move(j));
    }
    return Json{{"kind", "suite"},        {"suite", s.suite}, {"subject", s.subject}, {"passed", s.passed()},
                {"wall_ms", s.wall_ms}, {"steps", steps},   {"notes", s.notes}};
}

std::string report_digest(const Json& doc) { return sha256_hex(without_timing(doc).dump()); }

Json ReportDocument::to_json() const {
    Json in = Json::array();
    for (const auto& i : inputs) in.push_back(Json{{"source", i.source}, {"sha256", i.sha256}});
    Json doc{{"tool", "homhopf"},
             {"version", kToolVersion},
             {"schema", kReportSchema},
             {"command", command},
             {"inputs", in},
             {"results", results},
             {"exit_status", exit_status}};
    doc["digest"] = report_digest(doc);
    return doc;
}

}  // namespace homhopf
