#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/sequence.hpp"
#include "cantorval/sigma.hpp"
#include "cantorval/thresholds.hpp"

namespace cantorval {

enum class CertificateMethod { THEOREM_2_CONSTRUCTION, THEOREM_7_DIGITS };

inline const char* certificate_method_name(CertificateMethod m) {
    return m == CertificateMethod::THEOREM_2_CONSTRUCTION ? "THEOREM_2_CONSTRUCTION"
                                                          : "THEOREM_7_DIGITS";
}

// A closed interval guaranteed to lie inside the achievement set.
struct IntervalCertificate {
    Ratio lo;
    Ratio hi;
    CertificateMethod method;
    int witness_depth = 0;
};

// Interval from a run n0..n0+n of consecutive subset sums: when q >= 1/(n+1),
// digit strings over {n0,...,n0+n} realize every point of
// [n0/(1-q), (n0+n)/(1-q)].  Returns nullopt when no run is long enough or q
// sits below the completeness bound.
inline std::optional<IntervalCertificate> certificate_theorem2(const MultigeometricSeq& x) {
    const Run run = best_run(sigma_set(x));
    if (run.n < 1) return std::nullopt;
    if (x.q < Ratio(1, run.n + 1)) return std::nullopt;
    IntervalCertificate cert;
    cert.lo = Ratio(run.n0) / (1 - x.q);
    cert.hi = Ratio(run.n0 + run.n) / (1 - x.q);
    cert.method = CertificateMethod::THEOREM_2_CONSTRUCTION;
    cert.witness_depth = 0;
    return cert;
}

// Greedy digit check for the run construction: peels `steps` digits
// d_j = min(n, floor(r/q^j)) off t - n0/(1-q) and confirms the remainder
// invariant 0 <= r <= n*q^(j+1)/(1-q) after every step.  The invariant is
// self-sustaining once q >= 1/(n+1), so surviving the prefix proves t is
// realized in the limit.  Exact rational arithmetic throughout.
inline bool theorem2_realizes(const MultigeometricSeq& x, const Ratio& t, int steps = 50) {
    const Run run = best_run(sigma_set(x));
    if (run.n < 1 || x.q < Ratio(1, run.n + 1)) return false;
    const Ratio lo = Ratio(run.n0) / (1 - x.q);
    const Ratio hi = Ratio(run.n0 + run.n) / (1 - x.q);
    if (t < lo || t > hi) return false;
    Ratio r = t - lo;
    Ratio qj(1); // q^j
    for (int j = 0; j < steps; ++j) {
        if (r == 0) return true;
        BigInt d = floor_ratio(r / qj);
        if (d > run.n) d = run.n;
        if (d < 0) return false;
        r -= Ratio(d) * qj;
        qj *= x.q;
        if (r < 0 || r > Ratio(run.n) * qj / (1 - x.q)) return false;
    }
    return true;
}

// One level of a digit string over the block (3, 2, ..., 2): `threes` in {0,1}
// copies of the 3 and `twos` in {0..kappa} copies of a 2, except that borrow
// digits may use all of both (value 2*kappa + 3).
struct DigitLevel {
    int threes = 0;
    int twos = 0;

    long long value() const { return 3LL * threes + 2LL * twos; }
};

struct DigitRepresentation {
    std::vector<DigitLevel> levels;          // levels 0..size-1
    std::optional<DigitLevel> constant_tail; // repeated at every deeper level

    Ratio resum(const Ratio& q) const {
        Ratio v = 0;
        Ratio qi(1);
        for (const DigitLevel& level : levels) {
            v += Ratio(level.value()) * qi;
            qi *= q;
        }
        if (constant_tail) v += Ratio(constant_tail->value()) * qi / (1 - q);
        return v;
    }
};

inline constexpr size_t kTheorem7GridBudget = 1'000'000;

struct Theorem7Report {
    IntervalCertificate certificate; // [3, 4]
    long long kappa = 0;
    int depth = 0;
    size_t grid_points = 0; // (2*kappa+2)^depth + 1
    std::vector<DigitRepresentation> representations; // index j holds 3 + j/B^depth
};

// Digit certificate for the family (3, 2 x kappa; 1/(2*kappa+2)): constructs an
// explicit representation for every grid point 3 + j/B^depth, j = 0..B^depth,
// B = 2*kappa+2, and re-sums each one exactly.  Grid points with last digit 1
// borrow from the previous level; the borrowed digit has value B+1.  Since the
// grid is closed under refinement and E is closed, [3, 4] lies inside E.
inline Theorem7Report certificate_theorem7(long long kappa, int depth,
                                           size_t budget = kTheorem7GridBudget) {
    if (kappa < 1) throw InapplicableCertificate("digit certificate needs kappa >= 1");
    if (depth < 1) throw InapplicableCertificate("digit certificate needs depth >= 1");
    const long long base = 2 * kappa + 2;
    const Ratio q(1, base);

    BigInt grid = 1;
    for (int i = 0; i < depth; ++i) {
        grid *= base;
        if (grid > BigInt(budget))
            throw BudgetExceeded(i + 1, "digit grid needs " + grid.str() + "+ points, budget is " +
                                            std::to_string(budget));
    }
    const size_t grid_count = grid.convert_to<size_t>();

    auto expect = [&](int level, size_t j) {
        // 3 + j / base^level
        return Ratio(3) + make_ratio(BigInt(j), ipow(BigInt(base), static_cast<unsigned>(level)));
    };
    auto check = [&](const DigitRepresentation& rep, int level, size_t j) {
        if (rep.resum(q) != expect(level, j))
            throw DigitGapFailure("digit string for grid point " + ratio_str(expect(level, j)) +
                                  " re-sums to " + ratio_str(rep.resum(q)));
    };

    std::vector<DigitRepresentation> prev;
    prev.push_back({{DigitLevel{1, 0}}, std::nullopt}); // level 0: the single point 3
    const size_t ubase = static_cast<size_t>(base);
    for (int level = 1; level <= depth; ++level) {
        size_t count = 1;
        for (int i = 0; i < level; ++i) count *= ubase;
        std::vector<DigitRepresentation> cur;
        cur.reserve(count);
        for (size_t j = 0; j < count; ++j) {
            const size_t jp = j / ubase;
            const size_t eps = j % ubase;
            DigitRepresentation rep;
            if (eps != 1) {
                rep = prev[jp];
                rep.levels.resize(static_cast<size_t>(level) + 1);
                rep.levels[static_cast<size_t>(level)] =
                    (eps % 2 == 0) ? DigitLevel{0, static_cast<int>(eps / 2)}
                                   : DigitLevel{1, static_cast<int>((eps - 3) / 2)};
            } else if (jp == 0) {
                // 3 + 1/B^level: digit 2, then B-1 at every level up to the
                // borrow digit B+1.
                rep.levels.assign(static_cast<size_t>(level) + 1,
                                  DigitLevel{1, static_cast<int>(kappa - 1)});
                rep.levels.front() = DigitLevel{0, 1};
                rep.levels.back() = DigitLevel{1, static_cast<int>(kappa)};
            } else {
                // Borrow: represent the previous grid point one level up, then
                // add (B+1)/B^level.
                rep = prev[jp - 1];
                rep.levels.resize(static_cast<size_t>(level) + 1);
                rep.levels[static_cast<size_t>(level)] = DigitLevel{1, static_cast<int>(kappa)};
            }
            check(rep, level, j);
            cur.push_back(std::move(rep));
        }
        prev = std::move(cur);
    }

    // Right endpoint 4: a finite digit for kappa >= 2, a constant tail for kappa = 1.
    DigitRepresentation endpoint;
    if (kappa >= 2) {
        endpoint.levels = {DigitLevel{0, 2}};
    } else {
        endpoint.levels = {DigitLevel{1, 0}};
        endpoint.constant_tail = DigitLevel{1, 0};
    }
    if (endpoint.resum(q) != Ratio(4)) throw DigitGapFailure("endpoint digit string does not re-sum to 4");
    prev.push_back(std::move(endpoint));

    Theorem7Report report;
    report.certificate = {Ratio(3), Ratio(4), CertificateMethod::THEOREM_7_DIGITS, depth};
    report.kappa = kappa;
    report.depth = depth;
    report.grid_points = grid_count + 1;
    report.representations = std::move(prev);
    return report;
}

} // namespace cantorval
