#pragma once

#include <map>
#include <string>
#include <vector>

namespace schurcalc {

// Outcome of a verification sweep. Failures are report content, not
// exceptions; `checked` counts the atomic assertions performed.
struct VerificationReport {
    std::string suite;
    long long checked = 0;
    bool passed = true;
    std::vector<std::string> counterexamples;
    // Suite-specific extras (e.g. the balmer suite's spurious count),
    // serialized under "details" when nonempty.
    std::map<std::string, std::string> details;

    void fail(std::string counterexample) {
        passed = false;
        counterexamples.push_back(std::move(counterexample));
    }
};

}  // namespace schurcalc
