#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "cantorval/certificate.hpp"
#include "cantorval/cover.hpp"
#include "cantorval/membership.hpp"
#include "cantorval/oracle.hpp"

using namespace cantorval;

namespace {

MultigeometricSeq seq(std::vector<long long> k, long long qn, long long qd) {
    return canonicalize(std::move(k), Ratio(qn, qd));
}

bool interval_inside(const RatioInterval& inner, const std::vector<RatioInterval>& outer) {
    for (const RatioInterval& o : outer)
        if (o.lo <= inner.lo && inner.hi <= o.hi) return true;
    return false;
}

// Subset sums by direct recursion on exact rationals, as an independent check.
std::vector<Ratio> enumerate_subsums(const MultigeometricSeq& x, int n_terms) {
    std::vector<Ratio> sums{Ratio(0)};
    for (int i = 1; i <= n_terms; ++i) {
        const Ratio t = term(x, i);
        const size_t count = sums.size();
        for (size_t j = 0; j < count; ++j) sums.push_back(sums[j] + t);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

} // namespace

TEST_CASE("depth zero cover is the trivial hull") {
    const DepthCover c = depth_cover(seq({3, 2}, 1, 4), 0);
    CHECK(c.depth == 0);
    CHECK(c.point_count() == 1);
    CHECK(c.tail_radius == Ratio(20, 3));
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0].lo == Ratio(0));
    CHECK(c.components[0].hi == Ratio(20, 3));
    CHECK(c.total_length == Ratio(20, 3));
}

TEST_CASE("depth one cover merges touching intervals") {
    const DepthCover c = depth_cover(seq({3, 2}, 1, 4), 1);
    CHECK(c.depth == 1);
    CHECK(c.points() == std::vector<Ratio>{Ratio(0), Ratio(2), Ratio(3), Ratio(5)});
    CHECK(c.tail_radius == Ratio(5, 3));
    REQUIRE(c.components.size() == 3);
    CHECK(c.components[0].lo == Ratio(0));
    CHECK(c.components[0].hi == Ratio(5, 3));
    CHECK(c.components[1].lo == Ratio(2)); // 2 and 3 joined, 3 + 5/3 < 5 splits
    CHECK(c.components[1].hi == Ratio(14, 3));
    CHECK(c.components[2].lo == Ratio(5));
    CHECK(c.components[2].hi == Ratio(20, 3));
    CHECK(c.total_length == Ratio(6));
}

TEST_CASE("depth two cover in scaled integers") {
    const DepthCover c = depth_cover(seq({3, 2}, 1, 4), 2);
    CHECK(c.scale == BigInt(4));
    CHECK(c.point_count() == 16);
    CHECK(c.scaled_points.front() == 0);
    CHECK(c.scaled_points.back() == 25);
    CHECK(c.components.size() == 9);
    CHECK(c.total_length == Ratio(11, 2));
}

TEST_CASE("covers nest as depth grows") {
    for (const auto& x : {seq({3, 2}, 1, 4), seq({3, 2}, 1, 5), seq({3, 2, 2, 2}, 1, 6)}) {
        CoverWalk walk(x);
        std::vector<RatioInterval> prev = walk.components();
        for (int d = 1; d <= 6; ++d) {
            walk.advance();
            const std::vector<RatioInterval> cur = walk.components();
            for (const RatioInterval& c : cur) CHECK(interval_inside(c, prev));
            prev = cur;
        }
    }
}

TEST_CASE("interval-type sequences keep a single component at every depth") {
    for (const auto& x : {seq({3, 2}, 2, 7), seq({3, 2, 2, 2}, 1, 5), seq({2, 1}, 1, 4)}) {
        CoverWalk walk(x);
        for (int d = 0; d <= 8; ++d) {
            if (d > 0) walk.advance();
            CHECK(walk.components().size() == 1);
        }
    }
}

TEST_CASE("cover point budget") {
    const auto h = seq({10, 9, 8, 7, 6, 5, 2}, 2, 49);
    CHECK_THROWS_MATCHES(depth_cover(h, 5), BudgetExceeded,
                         Catch::Matchers::Predicate<BudgetExceeded>(
                             [](const BudgetExceeded& e) { return e.depth == 5; }));
    const DepthCover c4 = depth_cover(h, 4);
    CHECK(c4.point_count() == 3111696); // 42^4, no collisions in base 49/2
}

TEST_CASE("oracle equals direct enumeration") {
    for (int n : {1, 2, 3, 4, 5, 6}) {
        const OracleSet o = oracle_subsums(seq({3, 2}, 1, 4), n);
        CHECK(o.sums() == enumerate_subsums(seq({3, 2}, 1, 4), n));
    }
    const OracleSet o = oracle_subsums(seq({5, 4, 3}, 1, 5), 9);
    CHECK(o.sums() == enumerate_subsums(seq({5, 4, 3}, 1, 5), 9));
}

TEST_CASE("oracle matches the cover construction on full blocks") {
    for (int d = 1; d <= 6; ++d) {
        const OracleSet o = oracle_subsums(seq({3, 2}, 1, 4), 2 * d);
        const DepthCover c = depth_cover(seq({3, 2}, 1, 4), d);
        CHECK(o.scale == c.scale);
        CHECK(o.scaled_sums == c.scaled_points);
    }
}

TEST_CASE("oracle gap structure at four terms") {
    const OracleSet o = oracle_subsums(seq({3, 2}, 1, 4), 4);
    CHECK(o.count() == 16);
    const auto gap = o.largest_gap();
    REQUIRE(gap.has_value());
    CHECK(gap->lo == Ratio(5, 4));
    CHECK(gap->hi == Ratio(2));
    CHECK(gap->length() == Ratio(3, 4));
}

TEST_CASE("the main gap persists across truncations") {
    Ratio prev_lo(-1);
    for (int n = 2; n <= 20; n += 2) {
        const OracleSet o = oracle_subsums(seq({3, 2}, 1, 5), n);
        const auto gap = o.largest_gap();
        REQUIRE(gap.has_value());
        CHECK(gap->hi == Ratio(2));
        CHECK(gap->length() >= Ratio(3, 4));
        CHECK(gap->lo >= prev_lo);
        prev_lo = gap->lo;
    }
}

TEST_CASE("oracle caps") {
    const auto x = seq({3, 2}, 1, 4);
    CHECK_THROWS_AS(oracle_subsums(x, 0), CapExceeded);
    CHECK_THROWS_AS(oracle_subsums(x, 31, true), CapExceeded);
    CHECK_THROWS_AS(oracle_subsums(x, 25), CapExceeded);
    // Extended counts work when allowed and affordable.
    const OracleSet o = oracle_subsums(seq({3, 2, 2, 2}, 1, 6), 25, true);
    CHECK(o.count() > 0);
    // (3,2;1/4) at 29 terms needs a bitset beyond the default allocation.
    CHECK_THROWS_AS(oracle_subsums(x, 29, true), BudgetExceeded);
}

TEST_CASE("run certificates") {
    const auto c1 = certificate_theorem2(seq({3, 2, 2, 2}, 1, 6));
    REQUIRE(c1.has_value());
    CHECK(c1->lo == Ratio(12, 5));
    CHECK(c1->hi == Ratio(42, 5));
    CHECK(c1->method == CertificateMethod::THEOREM_2_CONSTRUCTION);

    const auto c2 = certificate_theorem2(seq({8, 7, 6, 5, 4}, 1, 23));
    REQUIRE(c2.has_value());
    CHECK(c2->lo == Ratio(46, 11));
    CHECK(c2->hi == Ratio(299, 11));

    // Run of length one needs q >= 1/2, impossible.
    CHECK_FALSE(certificate_theorem2(seq({3, 2}, 1, 4)).has_value());
    // Ratio below the completeness bound: (3,2,2,2) needs q >= 1/6.
    CHECK_FALSE(certificate_theorem2(seq({3, 2, 2, 2}, 1, 7)).has_value());
}

TEST_CASE("greedy digits realize certified points") {
    const auto x = seq({3, 2, 2, 2}, 1, 6);
    const auto cert = certificate_theorem2(x);
    REQUIRE(cert.has_value());
    CHECK(theorem2_realizes(x, cert->lo));
    CHECK(theorem2_realizes(x, cert->hi));
    CHECK(theorem2_realizes(x, (cert->lo + cert->hi) / 2));
    CHECK(theorem2_realizes(x, Ratio(3)));
    CHECK(theorem2_realizes(x, Ratio(17, 4)));
    CHECK_FALSE(theorem2_realizes(x, cert->hi + Ratio(1, 1000)));
    CHECK_FALSE(theorem2_realizes(x, cert->lo - Ratio(1, 1000)));
}

TEST_CASE("digit certificates for the two-heavy family") {
    const Theorem7Report r1 = certificate_theorem7(1, 4);
    CHECK(r1.grid_points == 257);
    CHECK(r1.representations.size() == 257);
    CHECK(r1.certificate.lo == Ratio(3));
    CHECK(r1.certificate.hi == Ratio(4));
    CHECK(r1.certificate.method == CertificateMethod::THEOREM_7_DIGITS);
    const Ratio q1(1, 4);
    for (long long j = 0; j < 256; ++j)
        CHECK(r1.representations[j].resum(q1) == Ratio(3) + Ratio(j, 256));
    CHECK(r1.representations.back().resum(q1) == Ratio(4));
    CHECK(r1.representations.back().constant_tail.has_value()); // kappa 1 needs a tail for 4

    const Theorem7Report r2 = certificate_theorem7(2, 3);
    CHECK(r2.grid_points == 217);
    CHECK(r2.representations.size() == 217);
    const Ratio q2(1, 6);
    for (long long j = 0; j < 216; ++j)
        CHECK(r2.representations[j].resum(q2) == Ratio(3) + Ratio(j, 216));
    CHECK_FALSE(r2.representations.back().constant_tail.has_value()); // 4 = 2+2 directly

    // First borrow point 3 + 1/6 starts with the lone digit 2.
    const Theorem7Report r3 = certificate_theorem7(2, 1);
    REQUIRE(r3.representations.size() == 7);
    const DigitRepresentation& borrow = r3.representations[1];
    REQUIRE(borrow.levels.size() == 2);
    CHECK(borrow.levels[0].threes == 0);
    CHECK(borrow.levels[0].twos == 1);
    CHECK(borrow.levels[1].threes == 1);
    CHECK(borrow.levels[1].twos == 2);

    CHECK_THROWS_AS(certificate_theorem7(0, 3), InapplicableCertificate);
    CHECK_THROWS_AS(certificate_theorem7(1, 0), InapplicableCertificate);
    CHECK_THROWS_AS(certificate_theorem7(2, 9), BudgetExceeded);
}

TEST_CASE("digit levels stay within the block") {
    const Theorem7Report r = certificate_theorem7(2, 3);
    for (const DigitRepresentation& rep : r.representations) {
        for (size_t i = 0; i < rep.levels.size(); ++i) {
            CHECK(rep.levels[i].threes >= 0);
            CHECK(rep.levels[i].threes <= 1);
            CHECK(rep.levels[i].twos >= 0);
            CHECK(rep.levels[i].twos <= 2);
        }
    }
}

TEST_CASE("membership trichotomy") {
    const auto x = seq({3, 2}, 1, 4);
    CHECK(membership_test(x, Ratio(7, 2), 4) == Membership::In);
    CHECK(membership_test(x, Ratio(0), 4) == Membership::In);
    CHECK(membership_test(x, Ratio(20, 3), 4) == Membership::In); // all terms
    CHECK(membership_test(x, Ratio(9, 5), 1) == Membership::Out);
    CHECK(membership_test(x, Ratio(9, 5), 0) == Membership::Undetermined); // hull alone can't say
    CHECK(membership_test(x, Ratio(-1), 2) == Membership::Out);
    CHECK(membership_test(x, Ratio(7), 2) == Membership::Out);

    // The certificate decides points that pure search cannot.
    CHECK(membership_test(x, Ratio(1), 6, true) == Membership::In);
    CHECK(membership_test(x, Ratio(1), 6, false) == Membership::Undetermined);

    // A Cantor-type point resisting both exclusion and certification.
    CHECK(membership_test(seq({3, 2}, 1, 5), Ratio(1, 2), 8) == Membership::Undetermined);

    const auto y = seq({3, 2, 2, 2}, 1, 6);
    CHECK(membership_test(y, Ratio(5), 3) == Membership::In);
    CHECK(membership_test(y, Ratio(12, 5), 3) == Membership::In);
    CHECK(membership_test(y, Ratio(19, 10), 3) == Membership::Out);
}

TEST_CASE("membership without certificates still finds exact hits") {
    const auto x = seq({3, 2}, 1, 4);
    CHECK(membership_test(x, Ratio(7, 2), 4, false) == Membership::In);
    CHECK(membership_test(x, Ratio(9, 5), 3, false) == Membership::Out);
}
