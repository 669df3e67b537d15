#pragma once

#include <algorithm>
#include <iterator>
#include <vector>

#include "cantorval/certificate.hpp"
#include "cantorval/cover.hpp"
#include "cantorval/sequence.hpp"
#include "cantorval/sigma.hpp"
#include "cantorval/thresholds.hpp"

namespace cantorval {

enum class Membership { In, Out, Undetermined };

inline const char* membership_token(Membership m) {
    switch (m) {
        case Membership::In: return "In";
        case Membership::Out: return "Out";
        default: return "Undetermined";
    }
}

inline constexpr size_t kMembershipNodeBudget = 200'000;

namespace detail {

// Depth-first search over block prefixes.  A node holds the rebased remainder
// r, with t in E iff r in E; success requires an exact witness: r == 0 or r
// inside a certified interval.  Failure to find one proves nothing.
struct MembershipSearch {
    const SigmaSet& sigma;
    const Ratio& q;
    Ratio total;
    const std::vector<IntervalCertificate>& certs;
    int max_depth;
    size_t nodes = 0;

    bool find(const Ratio& r, int depth) {
        if (++nodes > kMembershipNodeBudget) return false;
        if (r == 0 || r == total) return true; // empty tail or the all-terms tail
        for (const IntervalCertificate& c : certs)
            if (c.lo <= r && r <= c.hi) return true;
        if (depth >= max_depth) return false;
        const Ratio lo_bound = r - q * total;
        for (long long s : sigma.sums) {
            if (Ratio(s) > r) break;
            if (Ratio(s) < lo_bound) continue;
            if (find((r - Ratio(s)) / q, depth + 1)) return true;
        }
        return false;
    }
};

} // namespace detail

// Three-valued membership: In and Out always carry an exact witness, anything
// else is reported Undetermined.  Out comes from falling outside a depth-j
// cover for some j <= d; In comes from a finite prefix whose remainder is
// exactly zero or sits inside a constructed interior interval.
inline Membership membership_test(const MultigeometricSeq& x, const Ratio& t, int d,
                                  bool use_certificates = true,
                                  size_t budget = kDefaultPointBudget) {
    if (d < 0) throw Error("membership depth must be >= 0");
    const Ratio total = total_sum(x);
    if (t < 0 || t > total) return Membership::Out;

    CoverWalk walk(x, budget);
    for (int level = 0; level <= d; ++level) {
        const auto comps = walk.components();
        auto it = std::upper_bound(comps.begin(), comps.end(), t,
                                   [](const Ratio& v, const RatioInterval& c) { return v < c.lo; });
        const bool inside = it != comps.begin() && std::prev(it)->contains(t);
        if (!inside) return Membership::Out;
        if (level == d) break;
        try {
            walk.advance();
        } catch (const BudgetExceeded&) {
            break; // deeper covers unaffordable; exclusion can't be sharpened
        }
    }

    std::vector<IntervalCertificate> certs;
    if (use_certificates) {
        if (const auto cert = certificate_theorem2(x)) certs.push_back(*cert);
        if (const auto kappa = theorem7_kappa(x.k)) {
            if (*kappa >= 1 && x.q == Ratio(1, 2 * *kappa + 2))
                certs.push_back(certificate_theorem7(*kappa, 1).certificate);
        }
    }

    const SigmaSet sigma = sigma_set(x);
    detail::MembershipSearch search{sigma, x.q, total, certs, d, 0};
    if (search.find(t, 0)) return Membership::In;
    return Membership::Undetermined;
}

} // namespace cantorval
