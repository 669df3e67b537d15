#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"

namespace cantorval {

// A multigeometric sequence: block k_1 >= k_2 >= ... >= k_m >= 1 repeated with
// ratio q in (0, 1/2).  Term i (1-based) is k_((i-1) mod m + 1) * q^((i-1) div m).
struct MultigeometricSeq {
    std::vector<long long> k; // canonical non-increasing order
    Ratio q;
    long long block_total = 0; // K = sum of the block

    int block_size() const { return static_cast<int>(k.size()); }
};

// Block totals are capped so downstream bitsets over [0, K] stay small.
inline constexpr long long kMaxBlockTotal = 100'000'000;

// Validates terms and ratio, sorts the block non-increasing.
inline MultigeometricSeq canonicalize(std::vector<long long> raw_k, const Ratio& q) {
    if (raw_k.empty()) throw NonPositiveTerm("block must contain at least one term");
    long long total = 0;
    for (long long v : raw_k) {
        if (v <= 0) throw NonPositiveTerm("block terms must be positive, got " + std::to_string(v));
        total += v;
        if (total > kMaxBlockTotal) throw Error("block total exceeds " + std::to_string(kMaxBlockTotal));
    }
    if (!(q > 0) || !(q < Ratio(1, 2)))
        throw RatioOutOfRange("ratio must lie in (0, 1/2), got " + ratio_str(q));
    std::sort(raw_k.begin(), raw_k.end(), std::greater<long long>());
    MultigeometricSeq x;
    x.k = std::move(raw_k);
    x.q = q;
    x.block_total = total;
    return x;
}

// Divides the block through by its gcd.  The achievement set only rescales, so
// classification happens on this form; that makes classify(alpha*k) = classify(k)
// hold by construction.
inline MultigeometricSeq primitive_form(const MultigeometricSeq& x) {
    long long g = 0;
    for (long long v : x.k) g = std::gcd(g, v);
    if (g <= 1) return x;
    std::vector<long long> reduced;
    reduced.reserve(x.k.size());
    for (long long v : x.k) reduced.push_back(v / g);
    return canonicalize(std::move(reduced), x.q);
}

// i-th sequence term, 1-based.
inline Ratio term(const MultigeometricSeq& x, long long i) {
    if (i < 1) throw Error("term index must be >= 1");
    const long long m = x.block_size();
    return Ratio(x.k[static_cast<size_t>((i - 1) % m)]) * qpow(x.q, static_cast<unsigned>((i - 1) / m));
}

// Sum of all terms after position i (i = 0 gives the full series sum).
// With i = d*m + r, 0 <= r < m: suffix of block d plus the geometric tail.
inline Ratio tail_sum(const MultigeometricSeq& x, long long i) {
    if (i < 0) throw Error("tail index must be >= 0");
    const long long m = x.block_size();
    const long long d = i / m;
    const long long r = i % m;
    long long suffix = 0;
    for (size_t idx = static_cast<size_t>(r); idx < x.k.size(); ++idx) suffix += x.k[idx];
    const Ratio qd = qpow(x.q, static_cast<unsigned>(d));
    return Ratio(suffix) * qd + Ratio(x.block_total) * qd * x.q / (1 - x.q);
}

inline Ratio total_sum(const MultigeometricSeq& x) { return tail_sum(x, 0); }

// True when the full sequence is non-increasing, i.e. q <= k_m / k_1.
inline bool is_monotone(const MultigeometricSeq& x) {
    return x.q <= Ratio(x.k.back(), x.k.front());
}

} // namespace cantorval
