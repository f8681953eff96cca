#pragma once

// Theorem-level suites. Each suite builds the objects involved, runs the
// generic checkers on them and compares structure constants entrywise. A
// suite never throws on a failed identity; failures are recorded in its steps.

#include <optional>
#include <string>
#include <vector>

#include "homhopf/catalog.hpp"
#include "homhopf/structures.hpp"

namespace homhopf {

struct SuiteStep {
    std::string name;
    CheckReport report;
};

struct SuiteResult {
    std::string suite;
    std::string subject;
    std::vector<SuiteStep> steps;
    std::vector<std::string> notes;
    double wall_ms = 0;

    bool passed() const;
    const SuiteStep* step(const std::string& name) const;
    std::string summary() const;
};

// Entrywise comparison of structure constants; the sweep runs over (i, j)
// for tensors and over rows for matrices.
CheckEntry compare_tensors(const std::string& id, const Tensor3& lhs, const Tensor3& rhs);
CheckEntry compare_matrices(const std::string& id, const Matrix& lhs, const Matrix& rhs);

SuiteResult verify_thm_2_6(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ModuleAction& act,
                           const ComoduleCoaction& co, const Ex27Expected* golden = nullptr);
SuiteResult verify_cor_2_9(const HomHopfAlgebra& H, const GroupData* group = nullptr);
SuiteResult verify_prop_2_19(const HomHopfAlgebra& H, std::optional<std::size_t> cyclic_order = std::nullopt);
SuiteResult verify_thm_4_5(const HomHopfAlgebra& A, std::optional<std::size_t> cyclic_order = std::nullopt);
SuiteResult verify_dual_pair_route(const HomHopfAlgebra& H);
SuiteResult verify_prop_4_7(const HomHopfAlgebra& A);

// thm2.6, cor2.9, prop2.19, thm4.5, dual-pair, prop4.7
std::vector<std::string> suite_names();
// Throws InvalidParameter for an unknown suite or when the entry lacks the
// bundled data a suite needs.
SuiteResult run_suite(const std::string& suite, const CatalogEntry& entry);

// Order n when the entry is cyclic:n, used to enable closed-form comparisons.
std::optional<std::size_t> cyclic_order_of(const CatalogEntry& entry);

}  // namespace homhopf
