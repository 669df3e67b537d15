#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cantorval/rational.hpp"
#include "cantorval/sequence.hpp"
#include "cantorval/sigma.hpp"

namespace cantorval {

// Every threshold depends on the block alone, never on q; the sweep over q in
// scan() relies on that.
//
// With suffix sums S_i = k_{i+1} + ... + k_m, the dominance excesses are
// D_i = k_i - S_i.  D = max D_i is what the largest-term condition must absorb:
// the whole sequence is "small-tailed" at ratio q exactly when q >= D/(K+D).
// d = min D_i plays the opposite role: when even the least excess is positive,
// q < d/(K+d) forces a gap at every position.
struct Thresholds {
    Ratio kakeya_I_threshold;              // D/(K+D): at or above, finite union of intervals
    std::optional<Ratio> kakeya_II_bound;  // d/(K+d) when d > 0: strictly below, Cantor set
    Ratio theorem3_bound;                  // 1/card(Sigma): strictly below, Cantor set
    std::optional<Ratio> window_lo;        // 1/(n+1) for the best run, when n >= 1
    Ratio window_hi_naive;                 // k_m/(K+k_m)
    Ratio window_hi_refined;               // D/(K+D), never below the naive bound
    Ratio monotone_bound;                  // k_m/k_1, monotonicity cap on q
    long long dominance_max = 0;           // D
    std::optional<long long> dominance_min_pos; // d when d > 0
    std::optional<Run> run;                // best run (longest, then smallest start)
    size_t sigma_cardinality = 0;
};

inline Thresholds thresholds(const std::vector<long long>& block) {
    std::vector<long long> k = block;
    std::sort(k.begin(), k.end(), std::greater<long long>());
    long long total = 0;
    for (long long v : k) total += v;

    long long suffix = 0;
    long long dmax = k.back(); // D_m = k_m since S_m = 0
    long long dmin = k.back();
    for (size_t i = k.size(); i-- > 0;) {
        const long long excess = k[i] - suffix;
        dmax = std::max(dmax, excess);
        dmin = std::min(dmin, excess);
        suffix += k[i];
    }

    const SigmaSet sigma = sigma_set(k);

    Thresholds t;
    t.dominance_max = dmax;
    t.kakeya_I_threshold = Ratio(dmax, total + dmax);
    if (dmin > 0) {
        t.dominance_min_pos = dmin;
        t.kakeya_II_bound = Ratio(dmin, total + dmin);
    }
    t.theorem3_bound = Ratio(1, static_cast<long long>(sigma.cardinality()));
    const Run r = best_run(sigma);
    t.run = r;
    if (r.n >= 1) t.window_lo = Ratio(1, r.n + 1);
    t.window_hi_naive = Ratio(k.back(), total + k.back());
    t.window_hi_refined = t.kakeya_I_threshold;
    t.monotone_bound = Ratio(k.back(), k.front());
    t.sigma_cardinality = sigma.cardinality();
    return t;
}

inline Thresholds thresholds(const MultigeometricSeq& x) { return thresholds(x.k); }

// Recognizes the block (3, 2, 2, ..., 2) with kappa >= 1 twos, the family whose
// ratio 1/(2*kappa + 2) is certified a Cantorval by the digit construction.
inline std::optional<long long> theorem7_kappa(const std::vector<long long>& block) {
    std::vector<long long> k = block;
    std::sort(k.begin(), k.end(), std::greater<long long>());
    if (k.size() < 2 || k.front() != 3) return std::nullopt;
    for (size_t i = 1; i < k.size(); ++i)
        if (k[i] != 2) return std::nullopt;
    return static_cast<long long>(k.size()) - 1;
}

struct CriticalPoint {
    Ratio q;
    std::vector<std::string> labels; // sorted, distinct
};

// All named threshold values falling strictly inside (0, 1/2), deduplicated by
// value with merged label lists.  This is the scan grid and the bracket source
// for Unknown verdicts.
inline std::vector<CriticalPoint> labeled_critical_points(const std::vector<long long>& block) {
    const Thresholds t = thresholds(block);
    std::vector<std::pair<Ratio, std::string>> named;
    named.emplace_back(t.theorem3_bound, "theorem3_bound");
    named.emplace_back(t.kakeya_I_threshold, "kakeya_I_threshold");
    if (t.kakeya_II_bound) named.emplace_back(*t.kakeya_II_bound, "kakeya_II_bound");
    if (t.window_lo) named.emplace_back(*t.window_lo, "window_lo");
    named.emplace_back(t.window_hi_naive, "window_hi_naive");
    named.emplace_back(t.window_hi_refined, "window_hi_refined");
    named.emplace_back(t.monotone_bound, "monotone_bound");
    if (const auto kappa = theorem7_kappa(block))
        named.emplace_back(Ratio(1, 2 * *kappa + 2), "theorem7_point");

    std::vector<CriticalPoint> points;
    const Ratio half(1, 2);
    for (auto& [value, label] : named) {
        if (!(value > 0) || !(value < half)) continue;
        auto it = std::find_if(points.begin(), points.end(),
                               [&](const CriticalPoint& p) { return p.q == value; });
        if (it == points.end())
            points.push_back({value, {label}});
        else
            it->labels.push_back(label);
    }
    std::sort(points.begin(), points.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.q < b.q; });
    for (auto& p : points) std::sort(p.labels.begin(), p.labels.end());
    return points;
}

} // namespace cantorval
