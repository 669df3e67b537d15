#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/sequence.hpp"

namespace cantorval {

// One column of a q-power table: coef * q^exponent.
struct TermPower {
    long long coef = 0;
    int exponent = 0;
};

// Splitting of a finite q-power multiset into a finite head plus a
// multigeometric core.  The achievement set of the input is the achievement
// set of the core translated by every subset sum of the head, so the core's
// classification transfers.
struct ShiftDecomposition {
    std::vector<Ratio> head; // sorted descending
    MultigeometricSeq core;
};

// For each column c*q^e, finds the largest j in [0, search_bound] such that
// c*q^(e+j) is a positive integer; that integer becomes a core block term and
// the j earlier powers c*q^e, ..., c*q^(e+j-1) go to the head.  Largest j gives
// the lexicographically smallest core block.  Returns nullopt when any column
// admits no such j.
inline std::optional<ShiftDecomposition> shift_normalize(const std::vector<TermPower>& terms,
                                                         const Ratio& q,
                                                         int search_bound = 3) {
    if (terms.empty()) throw Error("shift_normalize needs at least one term");
    if (search_bound < 0) throw Error("search bound must be >= 0");
    if (!(q > 0) || !(q < Ratio(1, 2)))
        throw RatioOutOfRange("ratio must lie in (0, 1/2), got " + ratio_str(q));

    std::vector<Ratio> head;
    std::vector<long long> core_terms;
    for (const TermPower& t : terms) {
        if (t.coef <= 0) throw NonPositiveTerm("term coefficients must be positive");
        if (t.exponent < -search_bound || t.exponent > search_bound)
            throw Error("term exponent exceeds search bound");
        Ratio gamma = Ratio(t.coef) * (t.exponent >= 0
                                           ? qpow(q, static_cast<unsigned>(t.exponent))
                                           : qpow(1 / q, static_cast<unsigned>(-t.exponent)));
        std::optional<int> found;
        for (int j = search_bound; j >= 0; --j) {
            if (den(gamma * qpow(q, static_cast<unsigned>(j))) == 1) {
                found = j;
                break;
            }
        }
        if (!found) return std::nullopt;
        const BigInt core_value = num(gamma * qpow(q, static_cast<unsigned>(*found)));
        if (core_value > kMaxBlockTotal) throw Error("core term exceeds block cap");
        core_terms.push_back(core_value.convert_to<long long>());
        for (int t2 = 0; t2 < *found; ++t2) head.push_back(gamma * qpow(q, static_cast<unsigned>(t2)));
    }
    std::sort(head.begin(), head.end(), std::greater<Ratio>());
    ShiftDecomposition d;
    d.head = std::move(head);
    d.core = canonicalize(std::move(core_terms), q);
    return d;
}

} // namespace cantorval
