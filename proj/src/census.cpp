#include "qv/census.hpp"

#include <algorithm>
#include <map>

namespace qv {

namespace {

void check_prime(long long p) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw Error("census: p must be one of {2, 3, 5, 7}");
}

std::vector<int> invariant_key(const RepF& v, const std::vector<PathWord>& paths,
                               bool alternate) {
    std::vector<int> key;
    for (const auto& m : v.maps) key.push_back(rank(m));
    if (!alternate) {
        for (const auto& pw : paths) key.push_back(rank(path_composite(v, pw.arrows)));
    } else {
        // same data, coarser-to-finer in reversed path order
        for (auto it = paths.rbegin(); it != paths.rend(); ++it)
            key.push_back(rank(path_composite(v, it->arrows)));
        std::reverse(key.begin(), key.end());
    }
    return key;
}

}  // namespace

CensusReport census(PresPtr pres, std::vector<int> dims, long long p, const CensusOptions& opts) {
    check_prime(p);
    pres->validate();
    if (dims.size() != pres->quiver.vertices.size())
        throw Error("census: dimension vector length mismatch");
    long long cells = 0;
    for (const auto& a : pres->quiver.arrows)
        cells += static_cast<long long>(dims[static_cast<size_t>(a.head)]) *
                 dims[static_cast<size_t>(a.tail)];
    if (cells > opts.max_cells)
        throw Error("census budget exceeded: " + std::to_string(cells) + " matrix entries > " +
                    std::to_string(opts.max_cells));
    double assignments = 1;
    for (long long i = 0; i < cells; ++i) assignments *= static_cast<double>(p);
    if (assignments > static_cast<double>(opts.max_assignments))
        throw Error("census budget exceeded: p^cells too large");

    // nontrivial nonzero paths drive the rank invariants
    std::vector<PathWord> paths;
    for (const auto& pw : enumerate_nonzero_paths(*pres))
        if (pw.length() >= 2) paths.push_back(pw);

    CensusReport report;
    report.dims = dims;
    report.p = p;

    std::map<std::vector<int>, std::vector<size_t>> buckets;  // invariant key -> class indices

    std::vector<long long> counter(static_cast<size_t>(cells), 0);
    while (true) {
        // build the representation for the current assignment
        RepF v = make_zero_rep<Fp>(pres, dims, FieldInfo{p});
        size_t cell = 0;
        for (size_t ai = 0; ai < v.maps.size(); ++ai)
            for (int i = 0; i < v.maps[ai].rows(); ++i)
                for (int j = 0; j < v.maps[ai].cols(); ++j)
                    v.maps[ai].at(i, j) = Fp(counter[cell++], p);
        if (validate_rep(v).ok) {
            report.valid_assignments++;
            auto key = invariant_key(v, paths, opts.alternate_bucketing);
            auto& bucket = buckets[key];
            bool found = false;
            for (size_t ci : bucket) {
                if (is_isomorphic_fp(report.classes[ci].representative, v)) {
                    report.classes[ci].size++;
                    found = true;
                    break;
                }
            }
            if (!found) {
                bucket.push_back(report.classes.size());
                report.classes.push_back(CensusClass{v, 1, false});
            }
        }
        // advance the mixed-radix counter
        size_t pos = 0;
        while (pos < counter.size() && counter[pos] == p - 1) counter[pos++] = 0;
        if (pos == counter.size()) break;
        counter[pos]++;
    }

    for (auto& cls : report.classes)
        cls.indecomposable = !cls.representative.is_zero() &&
                             is_indecomposable_fp(cls.representative);
    report.total_classes = static_cast<long long>(report.classes.size());
    for (const auto& cls : report.classes)
        if (cls.indecomposable) report.indec_classes++;
    return report;
}

FiniteTypeReport finite_type_check(int n, long long p, const CensusOptions& opts) {
    if (n < 1 || n > 4) throw Error("finite_type_check: n must be in 1..4");
    if (p != 2 && p != 3) throw Error("finite_type_check: p must be 2 or 3");
    PresPtr pres = share(make_AA(n));
    FiniteTypeReport out;
    out.ok = true;

    std::vector<StringSpec> found;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> dims;
        for (int v = 0; v < n; ++v) dims.push_back((mask >> v) & 1);
        CensusReport rep = census(pres, dims, p, opts);
        for (const auto& cls : rep.classes) {
            if (!cls.indecomposable) continue;
            out.indec_count++;
            try {
                auto specs = classify_AA(lift_zero_one(cls.representative));
                if (specs.size() != 1) { out.ok = false; continue; }
                found.push_back(specs.front());
            } catch (const Error&) {
                out.ok = false;
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.strings_found = std::move(found);

    // spot check at one dimension vector with an entry 2: everything there
    // must decompose into strings, so no indecomposables at all
    out.spot_dims.assign(static_cast<size_t>(n), 1);
    out.spot_dims[static_cast<size_t>((n - 1) / 2)] = 2;
    CensusReport spot = census(pres, out.spot_dims, p, opts);
    out.spot_only_sums_of_strings = spot.indec_classes == 0;
    if (!out.spot_only_sums_of_strings) out.ok = false;
    return out;
}

}  // namespace qv
