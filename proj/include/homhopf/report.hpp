#pragma once

// JSON report documents written by the CLI. The layout is described in
// README.md. Timing fields ("wall_ms") are excluded from the digest so that
// repeated runs on identical inputs yield the same digest.

#include <string>
#include <vector>

#include "json.hpp"

#include "homhopf/structures.hpp"
#include "homhopf/verify.hpp"

namespace homhopf {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

using Json = nlohmann::ordered_json;

Json witness_json(const Witness& w);
Json check_report_json(const CheckReport& r);
Json suite_json(const SuiteResult& s);

struct ReportInput {
    std::string source;
    std::string sha256;
};

struct ReportDocument {
    std::string command;
    std::vector<ReportInput> inputs;
    std::vector<Json> results;
    int exit_status = 0;

    Json to_json() const;
};

// Digest of a document with every "wall_ms" and "digest" member removed.
std::string report_digest(const Json& doc);

}  // namespace homhopf
