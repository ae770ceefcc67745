#pragma once

#include "qv/rep_alg.hpp"

namespace qv {

struct CensusOptions {
    long long max_cells = 24;              // total matrix entries across arrows
    long long max_assignments = 1 << 24;   // p^cells enumeration guard
    bool alternate_bucketing = false;      // different invariant ordering, same answer
};

struct CensusClass {
    RepF representative;   // lexicographically least member (enumeration order)
    long long size = 0;    // members among relation-satisfying assignments
    bool indecomposable = false;
};

struct CensusReport {
    std::vector<int> dims;
    long long p = 0;
    long long valid_assignments = 0;
    long long total_classes = 0;
    long long indec_classes = 0;
    std::vector<CensusClass> classes;
};

// Brute-force enumeration of all matrix assignments over F_p at a fixed
// dimension vector, bucketed into isomorphism classes (rank invariants
// first, exhaustive intertwiner search within buckets).
CensusReport census(PresPtr pres, std::vector<int> dims, long long p,
                    const CensusOptions& opts = {});

struct FiniteTypeReport {
    bool ok = false;
    long long indec_count = 0;             // over all 0/1 dimension vectors
    std::vector<StringSpec> strings_found; // sorted, deduplicated
    std::vector<int> spot_dims;
    bool spot_only_sums_of_strings = false;
};

// Census of the doubled n-chain over all 0/1 dimension vectors: every
// indecomposable must lift to a string module; a spot census at one
// dimension vector with an entry 2 must contain no indecomposables at all.
FiniteTypeReport finite_type_check(int n, long long p, const CensusOptions& opts = {});

}  // namespace qv
