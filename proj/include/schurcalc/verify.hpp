#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurcalc/graded.hpp"
#include "schurcalc/report.hpp"

namespace schurcalc {

// Optional override of a suite's principal size bound (CLI --max-n). Each
// suite clamps it to its own safe maximum; suites without a size-like bound
// ignore it. Absent means the default verification configuration.
struct SuiteOptions {
    std::optional<int> max_n;
};

// Suite names accepted by run_suite, in execution order of "all".
const std::vector<std::string>& suite_names();

VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});
std::vector<VerificationReport> run_all_suites(const SuiteOptions& options = {});

// Test batteries shared by several suites: graded objects supported in
// degrees [-2, 2], either with bounded total dimension or with a per-degree
// multiplicity cap. Deterministically ordered; both include the zero object.
std::vector<GradedObject> graded_battery_total(int max_total);
std::vector<GradedObject> graded_battery_per_degree(int max_mult);

}  // namespace schurcalc
