#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/sequence.hpp"
#include "cantorval/shift.hpp"
#include "cantorval/thresholds.hpp"

namespace cantorval {

enum class Verdict { FiniteUnionOfIntervals, Cantor, Cantorval, Unknown };

inline const char* verdict_token(Verdict v) {
    switch (v) {
        case Verdict::FiniteUnionOfIntervals: return "I";
        case Verdict::Cantor: return "C";
        case Verdict::Cantorval: return "MC";
        default: return "Unknown";
    }
}

// Wire-format rule identifiers; these exact tokens appear in JSON output.
enum class RuleId { KAKEYA_I, KAKEYA_II, THEOREM_3, CANTORVAL_WINDOW, THEOREM_7, SHIFT_EQUIVALENCE };

inline const char* rule_name(RuleId id) {
    switch (id) {
        case RuleId::KAKEYA_I: return "KAKEYA_I";
        case RuleId::KAKEYA_II: return "KAKEYA_II";
        case RuleId::THEOREM_3: return "THEOREM_3";
        case RuleId::CANTORVAL_WINDOW: return "CANTORVAL_WINDOW";
        case RuleId::THEOREM_7: return "THEOREM_7";
        default: return "SHIFT_EQUIVALENCE";
    }
}

enum class Relation { LT, LE, EQ, GE, GT };

inline const char* relation_token(Relation r) {
    switch (r) {
        case Relation::LT: return "<";
        case Relation::LE: return "<=";
        case Relation::EQ: return "==";
        case Relation::GE: return ">=";
        default: return ">";
    }
}

// One satisfied comparison backing a verdict, e.g. "2/49 >= 1/38" for KAKEYA_I.
struct RuleRecord {
    RuleId rule;
    Ratio lhs;
    Relation rel;
    Ratio rhs;
    std::string note;

    std::string witness() const {
        return ratio_str(lhs) + " " + relation_token(rel) + " " + ratio_str(rhs);
    }
};

struct Classification {
    Verdict verdict = Verdict::Unknown;
    std::vector<RuleRecord> provenance;       // all applicable rules, fixed order
    std::optional<CriticalPoint> nearest_below; // set on Unknown when a threshold lies below q
    std::optional<CriticalPoint> nearest_above; // likewise above
};

namespace detail {

inline Verdict rule_verdict(RuleId id) {
    switch (id) {
        case RuleId::KAKEYA_I: return Verdict::FiniteUnionOfIntervals;
        case RuleId::KAKEYA_II:
        case RuleId::THEOREM_3: return Verdict::Cantor;
        default: return Verdict::Cantorval;
    }
}

// Evaluates the decision rules on a primitive sequence.  Records every rule
// that applies; the verdict comes from the first.  Contradictory verdicts mean
// the threshold algebra is broken, so fail loudly.
inline std::optional<Verdict> apply_rules(const MultigeometricSeq& p, const Thresholds& t,
                                          std::vector<RuleRecord>& records) {
    const Ratio& q = p.q;
    if (q >= t.kakeya_I_threshold)
        records.push_back({RuleId::KAKEYA_I, q, Relation::GE, t.kakeya_I_threshold,
                           "every term at most its tail"});
    if (q < t.theorem3_bound)
        records.push_back({RuleId::THEOREM_3, q, Relation::LT, t.theorem3_bound,
                           "contraction below 1/card(Sigma)"});
    if (t.kakeya_II_bound && q < *t.kakeya_II_bound)
        records.push_back({RuleId::KAKEYA_II, q, Relation::LT, *t.kakeya_II_bound,
                           "every term exceeds its tail"});
    if (t.window_lo && q >= *t.window_lo && q < t.window_hi_refined && q <= t.monotone_bound) {
        const std::string run_note =
            "run " + std::to_string(t.run->n0) + ".." + std::to_string(t.run->n0 + t.run->n);
        records.push_back({RuleId::CANTORVAL_WINDOW, q, Relation::GE, *t.window_lo,
                           "interior window lower bound, " + run_note});
        records.push_back({RuleId::CANTORVAL_WINDOW, q, Relation::LT, t.window_hi_refined,
                           "below the interval threshold"});
        records.push_back({RuleId::CANTORVAL_WINDOW, q, Relation::LE, t.monotone_bound,
                           "sequence monotone"});
    }
    if (const auto kappa = theorem7_kappa(p.k)) {
        const Ratio point(1, 2 * *kappa + 2);
        if (q == point)
            records.push_back({RuleId::THEOREM_7, q, Relation::EQ, point,
                               "digit construction, kappa " + std::to_string(*kappa)});
    }
    if (records.empty()) return std::nullopt;
    const Verdict verdict = rule_verdict(records.front().rule);
    for (const RuleRecord& r : records)
        if (rule_verdict(r.rule) != verdict)
            throw InternalInconsistency("rules " + std::string(rule_name(records.front().rule)) +
                                        " and " + rule_name(r.rule) + " disagree at q = " +
                                        ratio_str(q));
    return verdict;
}

} // namespace detail

// Decides the topological type of the achievement set.  Works on the primitive
// block; when no rule applies and the sequence is non-monotone, one re-blocking
// pass looks for an equivalent sequence that the rules do decide.
inline Classification classify(const MultigeometricSeq& x) {
    const MultigeometricSeq p = primitive_form(x);
    const Thresholds t = thresholds(p);
    Classification result;
    if (const auto verdict = detail::apply_rules(p, t, result.provenance)) {
        result.verdict = *verdict;
        return result;
    }

    if (x.q > t.monotone_bound) {
        std::vector<TermPower> columns;
        for (long long v : x.k) columns.push_back({v, 0});
        if (const auto dec = shift_normalize(columns, x.q)) {
            if (dec->core.k != x.k) {
                const MultigeometricSeq p2 = primitive_form(dec->core);
                Classification inner;
                if (const auto verdict = detail::apply_rules(p2, thresholds(p2), inner.provenance)) {
                    std::string head_note = "translates by subset sums of [";
                    for (size_t i = 0; i < dec->head.size(); ++i)
                        head_note += (i ? "," : "") + ratio_str(dec->head[i]);
                    head_note += "], core ";
                    for (size_t i = 0; i < dec->core.k.size(); ++i)
                        head_note += (i ? "," : "") + std::to_string(dec->core.k[i]);
                    inner.provenance.push_back(
                        {RuleId::SHIFT_EQUIVALENCE, x.q, Relation::EQ, x.q, head_note});
                    inner.verdict = *verdict;
                    return inner;
                }
            }
        }
    }

    for (const CriticalPoint& c : labeled_critical_points(p.k)) {
        if (c.q <= x.q) result.nearest_below = c;
        if (c.q > x.q && !result.nearest_above) result.nearest_above = c;
    }
    return result;
}

// classify after scaling the block by alpha.  Every scaled term must be a
// positive integer; classification itself is scale-invariant.
inline Classification classify_scaled(const MultigeometricSeq& x, const Ratio& alpha) {
    if (!(alpha > 0)) throw Error("scale factor must be positive");
    std::vector<long long> scaled;
    scaled.reserve(x.k.size());
    for (long long v : x.k) {
        const Ratio sv = alpha * v;
        if (den(sv) != 1)
            throw NonIntegralScale("scaled term " + std::to_string(v) + " * " + ratio_str(alpha) +
                                   " is not an integer");
        if (num(sv) > kMaxBlockTotal) throw Error("scaled term exceeds block cap");
        scaled.push_back(num(sv).convert_to<long long>());
    }
    return classify(canonicalize(std::move(scaled), x.q));
}

} // namespace cantorval
