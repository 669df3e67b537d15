#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantorval/cover.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/sequence.hpp"

namespace cantorval {

inline constexpr int kOracleSoftCap = 24;
inline constexpr int kOracleHardCap = 30;
inline constexpr size_t kDefaultOracleBits = size_t(1) << 28;
inline constexpr size_t kOracleGapRetention = 1'000'000;

// Exact subset sums of the first N terms.  Values are integers scaled by
// b^(ceil(N/m)-1); for N = m*d they coincide with the depth-d cover points.
struct OracleSet {
    int n_terms = 0;
    BigInt scale = 1;
    std::vector<BigInt> scaled_sums; // sorted, distinct
    std::vector<RatioInterval> gaps; // open intervals between consecutive sums
    bool gaps_elided = false;        // set when the gap list was too large to keep

    size_t count() const { return scaled_sums.size(); }
    Ratio sum(size_t i) const { return make_ratio(scaled_sums[i], scale); }
    std::vector<Ratio> sums() const {
        std::vector<Ratio> out;
        out.reserve(scaled_sums.size());
        for (const BigInt& s : scaled_sums) out.push_back(make_ratio(s, scale));
        return out;
    }

    // Widest gap, leftmost on ties.
    std::optional<RatioInterval> largest_gap() const {
        std::optional<RatioInterval> best;
        for (const RatioInterval& g : gaps)
            if (!best || g.length() > best->length()) best = g;
        return best;
    }
};

// Brute-force truncation oracle via a shift-or bitset sweep, one pass per term.
// Deliberately independent of the cover construction so the two can check each
// other.  N is capped at 30 outright and at 24 unless allow_extended is set.
inline OracleSet oracle_subsums(const MultigeometricSeq& x, int n_terms, bool allow_extended = false,
                                size_t max_points = kDefaultPointBudget,
                                size_t max_bits = kDefaultOracleBits) {
    if (n_terms < 1) throw CapExceeded("oracle needs at least one term");
    if (n_terms > kOracleHardCap)
        throw CapExceeded("oracle term count " + std::to_string(n_terms) + " exceeds hard cap " +
                          std::to_string(kOracleHardCap));
    if (n_terms > kOracleSoftCap && !allow_extended)
        throw CapExceeded("oracle term count " + std::to_string(n_terms) + " exceeds " +
                          std::to_string(kOracleSoftCap) + "; pass the override to allow up to " +
                          std::to_string(kOracleHardCap));

    const int m = x.block_size();
    const unsigned last_depth = static_cast<unsigned>((n_terms - 1) / m);
    const BigInt a = num(x.q), b = den(x.q);

    std::vector<BigInt> scaled_terms;
    BigInt total = 0;
    for (int i = 1; i <= n_terms; ++i) {
        const unsigned e = static_cast<unsigned>((i - 1) / m);
        const BigInt t = BigInt(x.k[static_cast<size_t>((i - 1) % m)]) * ipow(a, e) *
                         ipow(b, last_depth - e);
        scaled_terms.push_back(t);
        total += t;
    }
    const BigInt bits_needed = total + 1;
    if (bits_needed > BigInt(max_bits))
        throw BudgetExceeded(n_terms, "oracle bitset needs " + bits_needed.str() +
                                          " bits, budget is " + std::to_string(max_bits));

    const size_t width = bits_needed.convert_to<size_t>();
    std::vector<uint64_t> bits((width + 63) / 64, 0);
    bits[0] = 1;
    for (const BigInt& t : scaled_terms) {
        const size_t shift = t.convert_to<size_t>();
        const size_t word_shift = shift >> 6;
        const unsigned bit_shift = static_cast<unsigned>(shift & 63);
        for (size_t w = bits.size(); w-- > 0;) {
            uint64_t v = 0;
            if (w >= word_shift) {
                const size_t src = w - word_shift;
                v = bits[src] << bit_shift;
                if (bit_shift != 0 && src > 0) v |= bits[src - 1] >> (64 - bit_shift);
            }
            bits[w] |= v;
        }
    }

    size_t population = 0;
    for (uint64_t word : bits) population += static_cast<size_t>(std::popcount(word));
    if (population > max_points)
        throw BudgetExceeded(n_terms, "oracle yields " + std::to_string(population) +
                                          " sums, point budget is " + std::to_string(max_points));

    OracleSet oracle;
    oracle.n_terms = n_terms;
    oracle.scale = ipow(b, last_depth);
    oracle.scaled_sums.reserve(population);
    for (size_t w = 0; w < bits.size(); ++w) {
        uint64_t word = bits[w];
        while (word) {
            const int bit = std::countr_zero(word);
            oracle.scaled_sums.push_back(BigInt((w << 6) + static_cast<size_t>(bit)));
            word &= word - 1;
        }
    }

    if (oracle.scaled_sums.size() <= kOracleGapRetention) {
        for (size_t i = 1; i < oracle.scaled_sums.size(); ++i)
            oracle.gaps.push_back({oracle.sum(i - 1), oracle.sum(i)});
    } else {
        oracle.gaps_elided = true;
    }
    return oracle;
}

} // namespace cantorval
