#pragma once

#include "conf3/poly.hpp"

#include <string>
#include <vector>

namespace conf3::verify {

struct Check {
    std::string name;
    std::string anchor;  // the mathematical statement being tested
    bool pass = false;
    std::string expected;
    std::string computed;
};

// Canonical suite order: partitions, multiplicities, invariants, poincare,
// elements, presentations, unimodality, stable, collinear.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// The Hilbert series a named presentation is expected to realize: the closed
// forms for ordered/unordered, the model's cocycle tables for the others.
Poly1 presentation_target(const std::string& which, int m);

// Runs the named suites over m in [m_lo, m_hi]. The task list and result
// order are fixed up front; parallelism only changes the schedule. Unknown
// suite names and invalid ranges throw.
std::vector<Check> run_suites(const std::vector<std::string>& suites, int m_lo, int m_hi,
                              int parallelism);

bool all_pass(const std::vector<Check>& checks);

}  // namespace conf3::verify
