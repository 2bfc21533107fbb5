#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclex/error.hpp"
#include "cyclex/schemes.hpp"
#include "oracles.hpp"

namespace cyclex {
namespace {

CycleSeq ring(int n) {
    CycleSeq c;
    c.vertices.resize(static_cast<std::size_t>(n));
    std::iota(c.vertices.begin(), c.vertices.end(), 0);
    return c;
}

// Arc length computed by walking the orientation one step at a time.
int walk(const CycleSeq& c, int x, int y) {
    const auto at = std::find(c.vertices.begin(), c.vertices.end(), x) - c.vertices.begin();
    int steps = 0;
    for (auto i = at; c.vertices[static_cast<std::size_t>(i)] != y; i = (i + 1) % c.length()) ++steps;
    return steps;
}

bool valid_by_walking(const Scheme& s) {
    for (std::size_t i = 0; i < s.zsets.size(); ++i) {
        for (std::size_t j = 0; j < s.zsets.size(); ++j) {
            for (int x : s.zsets[i]) {
                for (int y : s.zsets[j]) {
                    if (x != y && walk(s.cycle, x, y) < (i == j ? 2 : s.r)) return false;
                }
            }
        }
    }
    return true;
}

const ClauseCheck* find(const SchemeAudit& a, BoundClause c) {
    for (const ClauseCheck& check : a.checks) {
        if (check.clause == c) return &check;
    }
    return nullptr;
}

TEST(ValidateScheme, Examples) {
    EXPECT_TRUE(validate_scheme({ring(8), {{0, 4}, {0, 4}}, 4}));
    EXPECT_FALSE(validate_scheme({ring(8), {{0, 2}, {4, 6}}, 4}));
    EXPECT_FALSE(validate_scheme({ring(8), {{3, 4}, {0}}, 2}));
    EXPECT_FALSE(validate_scheme({ring(8), {{7, 0}, {3}}, 2}));
    EXPECT_THROW(validate_scheme({ring(5), {{0}, {6}}, 2}), Error);
    EXPECT_THROW(validate_scheme({ring(5), {{0}}, 2}), Error);
}

TEST(ValidateScheme, OrientationMatters) {
    // 0 -> 3 is 3 steps but 3 -> 0 is 5 on C8; both directions must clear r.
    EXPECT_FALSE(validate_scheme({ring(8), {{0}, {3}}, 4}));
    const CycleSeq reversed{{0, 7, 6, 5, 4, 3, 2, 1}};
    EXPECT_EQ(segment_length(reversed, 0, 3), 5);
    EXPECT_EQ(segment_length(ring(8), 0, 3), 3);
    EXPECT_EQ(segment_length(ring(8), 4, 4), 0);
}

TEST(IsNontrivial, Examples) {
    const std::vector<VertexSet> a{{1}, {1}};
    const std::vector<VertexSet> b{{1, 2}, {1}};
    const std::vector<VertexSet> c{{1}, {2}, {1, 2}};
    EXPECT_FALSE(is_nontrivial(a));
    EXPECT_TRUE(is_nontrivial(b));
    EXPECT_FALSE(is_nontrivial(c));
}

TEST(IsNontrivial, MatchesChoiceFunctionOracle) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 2000; ++trial) {
        const int p = 2 + static_cast<int>(rng() % 3);
        std::vector<VertexSet> sets;
        std::vector<std::vector<int>> family;
        for (int i = 0; i < p; ++i) {
            const VertexSet z(rng() & 0x1f);
            sets.push_back(z);
            family.push_back(z.to_vector());
        }
        EXPECT_EQ(is_nontrivial(sets), testing::brute_sdr(family));
    }
}

TEST(SchemeLowerBound, Examples) {
    EXPECT_EQ(scheme_lower_bound(BoundClause::LemmaA, {{3, 3}, 0}, 4), 12);
    EXPECT_EQ(scheme_lower_bound(BoundClause::L1Base, {{3, 2}, 4}, 2), 9);
    EXPECT_EQ(scheme_lower_bound(BoundClause::C3, {{1, 1, 1, 1}, 0}, 5), 20);
    EXPECT_EQ(scheme_lower_bound(BoundClause::A4, {{1, 1}, 0}, 6), 12);
    // Half-integral min-form term rounds up: r(|Z1|+|Z2|)/2 = 3*3/2.
    EXPECT_EQ(scheme_lower_bound(BoundClause::LemmaA, {{2, 1}, 0}, 3), 5);
}

TEST(SchemeLowerBound, GuardErrorsNameTheClause) {
    try {
        scheme_lower_bound(BoundClause::A2, {{2, 2}, 0}, 4);
        FAIL() << "guard not enforced";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GuardViolated);
        EXPECT_NE(std::string(e.what()).find("a2"), std::string::npos);
    }
    EXPECT_THROW(scheme_lower_bound(BoundClause::B1, {{3, 2, 1}, 0}, 4), Error);
    EXPECT_THROW(scheme_lower_bound(BoundClause::C1, {{3, 3, 1, 1}, 0}, 4), Error);
}

TEST(ClauseNames, RoundTrip) {
    for (BoundClause c : kAllClauses) EXPECT_EQ(parse_clause(to_string(c)), c);
    EXPECT_FALSE(parse_clause("zz").has_value());
}

TEST(AuditScheme, Examples) {
    const SchemeAudit a = audit_scheme_lemmas({ring(12), {{0, 6}, {3, 9}}, 3});
    ASSERT_NE(find(a, BoundClause::L1Base), nullptr);
    EXPECT_EQ(find(a, BoundClause::L1Base)->bound, 8);
    ASSERT_NE(find(a, BoundClause::LemmaA), nullptr);
    EXPECT_EQ(find(a, BoundClause::LemmaA)->bound, 6);
    EXPECT_TRUE(a.all_passed());
    for (int r = 2; r <= 9; ++r) {
        const SchemeAudit t = audit_scheme_lemmas({ring(2 * r), {{0}, {r}}, r});
        const ClauseCheck* a4 = find(t, BoundClause::A4);
        ASSERT_NE(a4, nullptr);
        EXPECT_EQ(a4->bound, 2 * r);
        EXPECT_TRUE(a4->passed);
    }
    EXPECT_THROW(audit_scheme_lemmas({ring(8), {{0, 2}, {4, 6}}, 4}), Error);
    EXPECT_THROW(audit_scheme_lemmas({ring(8), {{0}, {0}}, 2}), Error);
}

TEST(AuditScheme, FaultInjectionShiftsEveryBound) {
    const SchemeAudit a = audit_scheme_lemmas({ring(8), {{0}, {4}}, 4}, 1);
    ASSERT_NE(find(a, BoundClause::A4), nullptr);
    EXPECT_EQ(find(a, BoundClause::A4)->bound, 9);
    EXPECT_FALSE(a.all_passed());
}

// The two-set base bound |Z1|+|Z2|+|Z1 ∪ Z2| counts every shared vertex
// three times, but at r = 2 the arcs leaving a shared vertex only need
// length 2.  The audit reports this scheme as a violation.
TEST(AuditScheme, BaseBoundFailsAtGapTwoWithSharedVertices) {
    const SchemeAudit a = audit_scheme_lemmas({ring(6), {{0, 2, 4}, {0, 2, 4}}, 2});
    const ClauseCheck* base = find(a, BoundClause::L1Base);
    ASSERT_NE(base, nullptr);
    EXPECT_EQ(base->bound, 9);
    EXPECT_FALSE(base->passed);
    EXPECT_FALSE(base->review_only);
}

// Random valid nontrivial schemes with r >= 3 on cycles up to 20: every
// applicable non-review clause bounds the cycle length.
TEST(AuditScheme, RandomSchemesRespectBounds) {
    std::mt19937_64 rng(77);
    int audited = 0;
    for (int trial = 0; trial < 20000 && audited < 2000; ++trial) {
        const int length = 6 + static_cast<int>(rng() % 15);
        const int r = 3 + static_cast<int>(rng() % static_cast<unsigned>(length / 2 - 2));
        const int p = 2 + static_cast<int>(rng() % 3);
        Scheme s{ring(length), {}, r};
        for (int i = 0; i < p; ++i) {
            VertexSet z;
            const int size = (i >= 2) ? 1 : 1 + static_cast<int>(rng() % 4);
            for (int k = 0; k < size; ++k) z.insert(static_cast<int>(rng() % static_cast<unsigned>(length)));
            s.zsets.push_back(z);
        }
        const bool valid = validate_scheme(s);
        EXPECT_EQ(valid, valid_by_walking(s));
        if (!valid || !is_nontrivial(s.zsets)) continue;
        ++audited;
        for (const ClauseCheck& c : audit_scheme_lemmas(s).checks) {
            if (!c.review_only) EXPECT_TRUE(c.passed) << to_string(c.clause) << " |Q|=" << length << " r=" << r;
        }
    }
    EXPECT_GT(audited, 200);
}

TEST(Sweep, SmallRangeIsDeterministic) {
    SweepOptions opts;
    opts.max_length = 9;
    const SweepReport one = scheme_soundness_sweep(opts);
    opts.workers = 3;
    const SweepReport three = scheme_soundness_sweep(opts);
    EXPECT_GT(one.schemes_checked, 0u);
    EXPECT_EQ(one.schemes_checked, three.schemes_checked);
    EXPECT_EQ(one.clause_checks, three.clause_checks);
    EXPECT_EQ(one.violations.size(), three.violations.size());
    EXPECT_EQ(one.review_failures, three.review_failures);
    for (const SweepFinding& f : one.violations) {
        EXPECT_EQ(f.check.clause, BoundClause::L1Base);
        EXPECT_EQ(f.r, 2);
    }
}

}  // namespace
}  // namespace cyclex
