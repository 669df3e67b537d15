#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "cantorval/rational.hpp"
#include "cantorval/sequence.hpp"
#include "cantorval/sigma.hpp"

namespace cantorval {

inline constexpr size_t kDefaultPointBudget = 5'000'000;

struct RatioInterval {
    Ratio lo;
    Ratio hi;

    Ratio length() const { return hi - lo; }
    bool contains(const Ratio& t) const { return lo <= t && t <= hi; }
};

// Depth-d outer approximation of the achievement set: after fixing the first d
// blocks the remainder lies in [0, K*q^d/(1-q)], so the set is covered by one
// interval of that radius per reachable d-block prefix sum.  Prefix sums are
// kept as integers scaled by b^(d-1) where q = a/b, which keeps every
// comparison exact.  Touching intervals count as one component.
struct DepthCover {
    int depth = 0;
    BigInt scale = 1;               // b^(d-1) for d >= 1, else 1
    std::vector<BigInt> scaled_points; // sorted, distinct
    Ratio tail_radius;              // K*q^d/(1-q)
    std::vector<RatioInterval> components;
    Ratio total_length;

    size_t point_count() const { return scaled_points.size(); }
    Ratio point(size_t i) const { return make_ratio(scaled_points[i], scale); }
    std::vector<Ratio> points() const {
        std::vector<Ratio> out;
        out.reserve(scaled_points.size());
        for (const BigInt& p : scaled_points) out.push_back(make_ratio(p, scale));
        return out;
    }
};

struct ComponentStats {
    size_t count = 0;
    std::vector<Ratio> lengths;
    Ratio total; // upper bound for the measure of the achievement set
};

inline ComponentStats component_stats(const DepthCover& cover) {
    ComponentStats s;
    s.count = cover.components.size();
    s.lengths.reserve(s.count);
    for (const RatioInterval& c : cover.components) s.lengths.push_back(c.length());
    s.total = cover.total_length;
    return s;
}

// Iterates covers of increasing depth while sharing the point sets between
// levels.  advance() refines by one block and throws BudgetExceeded when the
// next level cannot fit the point budget; the walker stays at its last depth.
class CoverWalk {
  public:
    CoverWalk(const MultigeometricSeq& x, size_t budget = kDefaultPointBudget)
        : x_(x), sigma_(sigma_set(x)), a_(num(x.q)), b_(den(x.q)), budget_(budget) {
        pts_.push_back(BigInt(0));
    }

    int depth() const { return depth_; }
    size_t point_count() const { return pts_.size(); }

    void advance() {
        // Max scaled value at the next depth: K * (b^(d+1) - a^(d+1)) / (b - a).
        const BigInt range_next =
            BigInt(x_.block_total) *
            (ipow(b_, static_cast<unsigned>(depth_ + 1)) - ipow(a_, static_cast<unsigned>(depth_ + 1))) /
            (b_ - a_);
        const BigInt combinations = BigInt(pts_.size()) * BigInt(sigma_.sums.size());
        const BigInt value_cap = range_next + 1;
        const BigInt prospective = std::min(combinations, value_cap);
        if (prospective > budget_)
            throw BudgetExceeded(depth_ + 1, "cover at depth " + std::to_string(depth_ + 1) +
                                                 " needs up to " + prospective.str() +
                                                 " points, budget is " + std::to_string(budget_));
        const BigInt bpow = ipow(b_, static_cast<unsigned>(depth_));
        if (value_cap <= BigInt(64) * budget_) {
            // Dense route: mark scaled values in a bitset, read them back sorted.
            const size_t range = value_cap.convert_to<size_t>();
            std::vector<uint64_t> bits((range + 63) / 64, 0);
            const uint64_t a64 = a_.convert_to<uint64_t>();
            const uint64_t bpow64 = bpow.convert_to<uint64_t>();
            std::vector<uint64_t> prev;
            prev.reserve(pts_.size());
            for (const BigInt& p : pts_) prev.push_back(p.convert_to<uint64_t>());
            for (long long s : sigma_.sums) {
                const uint64_t off = static_cast<uint64_t>(s) * bpow64;
                for (uint64_t p : prev) {
                    const uint64_t v = off + a64 * p;
                    bits[v >> 6] |= uint64_t(1) << (v & 63);
                }
            }
            std::vector<BigInt> next;
            for (size_t w = 0; w < bits.size(); ++w) {
                uint64_t word = bits[w];
                while (word) {
                    const int bit = std::countr_zero(word);
                    next.push_back(BigInt((w << 6) + static_cast<size_t>(bit)));
                    word &= word - 1;
                }
            }
            pts_ = std::move(next);
        } else {
            std::vector<BigInt> next;
            next.reserve(pts_.size() * sigma_.sums.size());
            for (long long s : sigma_.sums) {
                const BigInt off = BigInt(s) * bpow;
                for (const BigInt& p : pts_) next.push_back(off + a_ * p);
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            pts_ = std::move(next);
        }
        ++depth_;
    }

    BigInt scale() const { return depth_ <= 1 ? BigInt(1) : ipow(b_, static_cast<unsigned>(depth_ - 1)); }

    Ratio tail_radius() const {
        return Ratio(x_.block_total) * qpow(x_.q, static_cast<unsigned>(depth_)) / (1 - x_.q);
    }

    std::vector<RatioInterval> components() const {
        // Scaled merge test: gaps of at most K*a^d / (b-a) keep intervals joined.
        const BigInt rhs = BigInt(x_.block_total) * ipow(a_, static_cast<unsigned>(depth_));
        const BigInt width = b_ - a_;
        const BigInt sc = scale();
        const Ratio r = tail_radius();
        std::vector<RatioInterval> comps;
        size_t start = 0;
        for (size_t i = 1; i <= pts_.size(); ++i) {
            if (i == pts_.size() || (pts_[i] - pts_[i - 1]) * width > rhs) {
                comps.push_back({make_ratio(pts_[start], sc), make_ratio(pts_[i - 1], sc) + r});
                start = i;
            }
        }
        return comps;
    }

    DepthCover take() {
        DepthCover cover;
        cover.depth = depth_;
        cover.scale = scale();
        cover.tail_radius = tail_radius();
        cover.components = components();
        for (const RatioInterval& c : cover.components) cover.total_length += c.length();
        cover.scaled_points = std::move(pts_);
        return cover;
    }

  private:
    MultigeometricSeq x_;
    SigmaSet sigma_;
    BigInt a_, b_;
    size_t budget_;
    int depth_ = 0;
    std::vector<BigInt> pts_;
};

inline DepthCover depth_cover(const MultigeometricSeq& x, int d, size_t budget = kDefaultPointBudget) {
    if (d < 0) throw Error("cover depth must be >= 0");
    CoverWalk walk(x, budget);
    for (int j = 0; j < d; ++j) walk.advance();
    return walk.take();
}

} // namespace cantorval
