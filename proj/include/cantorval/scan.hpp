#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "cantorval/classify.hpp"
#include "cantorval/thresholds.hpp"

namespace cantorval {

// One maximal q-interval on which the rule set yields a single verdict.
// Endpoints are critical points (or the domain bounds 0 and 1/2); closedness
// records which endpoints belong to the region.
struct ScanRegion {
    Ratio lo;
    Ratio hi;
    bool lo_closed = false;
    bool hi_closed = false;
    Verdict verdict = Verdict::Unknown;
    std::optional<RuleId> rule; // first applicable rule at the sample point
    Ratio sample_q;
};

struct ScanSample {
    Ratio q;
    Verdict verdict;
};

struct ScanReport {
    std::vector<long long> k;
    std::vector<CriticalPoint> critical_points;
    std::vector<ScanRegion> regions; // partition of (0, 1/2), ascending
    std::vector<ScanSample> samples; // pre-merge samples, one per raw segment
};

// Sweeps q across (0, 1/2) for a fixed block.  All thresholds depend only on
// the block, so verdicts are constant between consecutive critical points;
// each gap is decided at its exact rational midpoint and each critical point
// at itself, then equal-verdict neighbours merge.  Isolated ratios inside a
// region can still pick up a sharper verdict from re-blocking; regions report
// the generic rule outcome.
inline ScanReport scan(const std::vector<long long>& block) {
    ScanReport report;
    {
        std::vector<long long> k = block;
        std::sort(k.begin(), k.end(), std::greater<long long>());
        for (long long v : k)
            if (v <= 0) throw NonPositiveTerm("block terms must be positive");
        if (k.empty()) throw NonPositiveTerm("block must contain at least one term");
        report.k = std::move(k);
    }
    const std::vector<long long> primitive_k = primitive_form(canonicalize(report.k, Ratio(1, 3))).k;
    report.critical_points = labeled_critical_points(primitive_k);

    struct Segment {
        Ratio lo, hi;
        bool lo_closed, hi_closed;
        Ratio sample;
        Verdict verdict;
        std::optional<RuleId> rule;
    };
    const Ratio half(1, 2);
    std::vector<Segment> segments;
    Ratio prev(0);
    for (const CriticalPoint& c : report.critical_points) {
        segments.push_back({prev, c.q, false, false, (prev + c.q) / 2, Verdict::Unknown, {}});
        segments.push_back({c.q, c.q, true, true, c.q, Verdict::Unknown, {}});
        prev = c.q;
    }
    segments.push_back({prev, half, false, false, (prev + half) / 2, Verdict::Unknown, {}});

    for (Segment& seg : segments) {
        const Classification cls = classify(canonicalize(report.k, seg.sample));
        seg.verdict = cls.verdict;
        if (!cls.provenance.empty()) seg.rule = cls.provenance.front().rule;
        report.samples.push_back({seg.sample, seg.verdict});
    }

    for (size_t i = 0; i < segments.size(); ++i) {
        size_t j = i;
        while (j + 1 < segments.size() && segments[j + 1].verdict == segments[i].verdict) ++j;
        ScanRegion region;
        region.lo = segments[i].lo;
        region.hi = segments[j].hi;
        region.lo_closed = segments[i].lo_closed;
        region.hi_closed = segments[j].hi_closed;
        region.verdict = segments[i].verdict;
        region.sample_q = (i == j) ? segments[i].sample : (region.lo + region.hi) / 2;
        const Classification cls = classify(canonicalize(report.k, region.sample_q));
        if (cls.verdict != region.verdict)
            throw InternalInconsistency("merged region disagrees with its midpoint at q = " +
                                        ratio_str(region.sample_q));
        if (!cls.provenance.empty()) region.rule = cls.provenance.front().rule;
        report.regions.push_back(region);
        i = j;
    }
    return report;
}

} // namespace cantorval
