#pragma once

#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/sequence.hpp"

namespace cantorval {

// The finite set of subset sums of one block, Sigma = { sum over A of k_i : A subset }.
// Always contains 0 and the block total K.
struct SigmaSet {
    std::vector<long long> sums; // sorted ascending, distinct
    long long block_total = 0;

    size_t cardinality() const { return sums.size(); }
};

inline SigmaSet sigma_set(const std::vector<long long>& block) {
    long long total = 0;
    for (long long v : block) {
        if (v <= 0) throw NonPositiveTerm("block terms must be positive");
        total += v;
        if (total > kMaxBlockTotal) throw Error("block total exceeds " + std::to_string(kMaxBlockTotal));
    }
    std::vector<bool> reach(static_cast<size_t>(total) + 1, false);
    reach[0] = true;
    for (long long v : block)
        for (long long s = total; s >= v; --s)
            if (reach[static_cast<size_t>(s - v)]) reach[static_cast<size_t>(s)] = true;
    SigmaSet sigma;
    sigma.block_total = total;
    for (long long s = 0; s <= total; ++s)
        if (reach[static_cast<size_t>(s)]) sigma.sums.push_back(s);
    return sigma;
}

inline SigmaSet sigma_set(const MultigeometricSeq& x) { return sigma_set(x.k); }

// A run of consecutive integers n0, n0+1, ..., n0+n inside Sigma \ {0}.
// n is the number of steps, so a lone value is a run with n = 0.
struct Run {
    long long n0 = 0;
    long long n = 0;
};

// All maximal runs among the positive subset sums, ascending by n0.
inline std::vector<Run> all_runs(const SigmaSet& sigma) {
    std::vector<Run> runs;
    size_t i = 0;
    while (i < sigma.sums.size() && sigma.sums[i] == 0) ++i;
    while (i < sigma.sums.size()) {
        size_t j = i;
        while (j + 1 < sigma.sums.size() && sigma.sums[j + 1] == sigma.sums[j] + 1) ++j;
        runs.push_back({sigma.sums[i], static_cast<long long>(j - i)});
        i = j + 1;
    }
    return runs;
}

// The run maximizing n, ties broken by smaller n0.  Throws when Sigma has no
// positive element, which only happens for an empty block.
inline Run best_run(const SigmaSet& sigma) {
    const auto runs = all_runs(sigma);
    if (runs.empty()) throw NoPositiveRun("subset-sum set has no positive element");
    Run best = runs.front();
    for (const Run& r : runs)
        if (r.n > best.n || (r.n == best.n && r.n0 < best.n0)) best = r;
    return best;
}

} // namespace cantorval
