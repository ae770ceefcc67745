#pragma once

#include <string>
#include <vector>

namespace qv::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// CLI-facing invariant suites; each returns one entry per checked fact.
std::vector<Check> quiver_core_suite();
std::vector<Check> strings_suite();
std::vector<Check> tits_suite();
std::vector<Check> atlas_suite();
std::vector<Check> moment_suite();
std::vector<Check> lemma_m2_suite();

// all of the above, names prefixed by suite
std::vector<Check> all_suites();

bool all_pass(const std::vector<Check>& checks);

}  // namespace qv::verify
