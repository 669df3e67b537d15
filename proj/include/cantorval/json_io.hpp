#pragma once

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "cantorval/certificate.hpp"
#include "cantorval/classify.hpp"
#include "cantorval/cover.hpp"
#include "cantorval/oracle.hpp"
#include "cantorval/scan.hpp"
#include "cantorval/sequence.hpp"
#include "cantorval/thresholds.hpp"

namespace cantorval {

using Json = nlohmann::ordered_json;

inline constexpr size_t kJsonListCap = 10'000;

// Machine output renders every rational as the canonical string "num/den".
inline Json classification_json(const MultigeometricSeq& x, const Classification& cls) {
    Json j;
    j["sequence"] = x.k;
    j["q"] = ratio_str(x.q);
    j["verdict"] = verdict_token(cls.verdict);
    const Thresholds t = thresholds(primitive_form(x));
    Json th;
    th["kakeya_I_threshold"] = ratio_str(t.kakeya_I_threshold);
    if (t.kakeya_II_bound) th["kakeya_II_bound"] = ratio_str(*t.kakeya_II_bound);
    th["theorem3_bound"] = ratio_str(t.theorem3_bound);
    if (t.window_lo) th["window_lo"] = ratio_str(*t.window_lo);
    th["window_hi_naive"] = ratio_str(t.window_hi_naive);
    th["window_hi_refined"] = ratio_str(t.window_hi_refined);
    th["monotone_bound"] = ratio_str(t.monotone_bound);
    j["thresholds"] = std::move(th);
    Json prov = Json::array();
    for (const RuleRecord& r : cls.provenance) {
        Json rec;
        rec["rule"] = rule_name(r.rule);
        rec["witness"] = r.witness();
        prov.push_back(std::move(rec));
    }
    j["provenance"] = std::move(prov);
    return j;
}

inline Json scan_json(const ScanReport& report) {
    Json j;
    j["sequence"] = report.k;
    Json crit = Json::array();
    for (const CriticalPoint& c : report.critical_points) {
        Json e;
        e["q"] = ratio_str(c.q);
        e["labels"] = c.labels;
        crit.push_back(std::move(e));
    }
    j["critical_points"] = std::move(crit);
    Json regions = Json::array();
    for (const ScanRegion& r : report.regions) {
        Json e;
        e["lo"] = ratio_str(r.lo);
        e["hi"] = ratio_str(r.hi);
        e["lo_closed"] = r.lo_closed;
        e["hi_closed"] = r.hi_closed;
        e["verdict"] = verdict_token(r.verdict);
        if (r.rule)
            e["rule"] = rule_name(*r.rule);
        else
            e["rule"] = nullptr;
        e["sample_q"] = ratio_str(r.sample_q);
        regions.push_back(std::move(e));
    }
    j["regions"] = std::move(regions);
    Json samples = Json::array();
    for (const ScanSample& s : report.samples) {
        Json e;
        e["q"] = ratio_str(s.q);
        e["verdict"] = verdict_token(s.verdict);
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    return j;
}

inline Json cover_json(const MultigeometricSeq& x, const DepthCover& cover) {
    Json j;
    j["sequence"] = x.k;
    j["q"] = ratio_str(x.q);
    j["depth"] = cover.depth;
    j["point_count"] = cover.point_count();
    j["tail_radius"] = ratio_str(cover.tail_radius);
    j["component_count"] = cover.components.size();
    j["total_length"] = ratio_str(cover.total_length);
    Json comps = Json::array();
    const size_t emit = std::min(cover.components.size(), kJsonListCap);
    for (size_t i = 0; i < emit; ++i) {
        Json e;
        e["lo"] = ratio_str(cover.components[i].lo);
        e["hi"] = ratio_str(cover.components[i].hi);
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    j["components_truncated"] = emit < cover.components.size();
    return j;
}

inline Json oracle_json(const MultigeometricSeq& x, const OracleSet& oracle) {
    Json j;
    j["sequence"] = x.k;
    j["q"] = ratio_str(x.q);
    j["terms"] = oracle.n_terms;
    j["count"] = oracle.count();
    Json sums = Json::array();
    const size_t emit = std::min(oracle.count(), kJsonListCap);
    for (size_t i = 0; i < emit; ++i) sums.push_back(ratio_str(oracle.sum(i)));
    j["sums"] = std::move(sums);
    j["sums_truncated"] = emit < oracle.count();
    if (const auto gap = oracle.largest_gap()) {
        Json g;
        g["lo"] = ratio_str(gap->lo);
        g["hi"] = ratio_str(gap->hi);
        g["length"] = ratio_str(gap->length());
        j["largest_gap"] = std::move(g);
    } else {
        j["largest_gap"] = nullptr;
    }
    j["gaps_elided"] = oracle.gaps_elided;
    return j;
}

inline Json certificate_json(const MultigeometricSeq& x, const IntervalCertificate& cert) {
    Json j;
    j["sequence"] = x.k;
    j["q"] = ratio_str(x.q);
    j["method"] = certificate_method_name(cert.method);
    j["lo"] = ratio_str(cert.lo);
    j["hi"] = ratio_str(cert.hi);
    j["witness_depth"] = cert.witness_depth;
    return j;
}

inline Json certificate_json(const MultigeometricSeq& x, const Theorem7Report& report) {
    Json j = certificate_json(x, report.certificate);
    j["kappa"] = report.kappa;
    j["depth"] = report.depth;
    j["grid_points"] = report.grid_points;
    return j;
}

} // namespace cantorval
