#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclex/cycles.hpp"

namespace cyclex {

/// A cycle with a fixed orientation (the order of `cycle.vertices`), a
/// family Z_1..Z_p of vertex subsets of the cycle, and the gap parameter r.
/// The sets may overlap.
struct Scheme {
    CycleSeq cycle;
    std::vector<VertexSet> zsets;
    int r = 2;
};

/// Length of the segment from x to y following the orientation, 0 when x == y.
int segment_length(const CycleSeq& cycle, int x, int y);

/// For every ordered pair of distinct x, y: the segment x->y has length >= 2
/// when x, y share a set, and >= r when they come from different sets.
/// Errors: InvalidScheme if a set holds a vertex that is not on the cycle,
/// p < 2 or r < 2.
bool validate_scheme(const Scheme& s);

/// True iff the family has a system of distinct representatives.
bool is_nontrivial(std::span<const VertexSet> zsets);

/// Lower-bound clauses for |Q|.  Two-set clauses (L1Base, A1..A5, LemmaA),
/// three-set clauses (B1..B3, LemmaB) and four-set clauses (C1..C3, LemmaC).
enum class BoundClause {
    L1Base, A1, A2, A3, A4, A5, LemmaA,
    B1, B2, B3, LemmaB,
    C1, C2, C3, LemmaC,
};

inline constexpr BoundClause kAllClauses[] = {
    BoundClause::L1Base, BoundClause::A1, BoundClause::A2, BoundClause::A3, BoundClause::A4,
    BoundClause::A5, BoundClause::LemmaA, BoundClause::B1, BoundClause::B2, BoundClause::B3,
    BoundClause::LemmaB, BoundClause::C1, BoundClause::C2, BoundClause::C3, BoundClause::LemmaC,
};

std::string_view to_string(BoundClause clause);
std::optional<BoundClause> parse_clause(std::string_view name);

/// Number of sets the clause is stated for.
int clause_arity(BoundClause clause);

/// |Z_1|..|Z_p| plus |Z_1 ∪ Z_2| (only read by L1Base).
struct SchemeSizes {
    std::vector<int> z;
    int union12 = 0;
};

SchemeSizes sizes_of(std::span<const VertexSet> zsets);

/// Whether the size/r guard of the clause holds.
bool clause_applies(BoundClause clause, const SchemeSizes& sizes, int r);

/// Closed-form bound of the clause.  For the min-form clauses (LemmaA/B/C)
/// the half-integral term r(|Z_1|+|Z_2|)/2 is rounded up, which is exact for
/// a bound on the integer |Q|.  Errors: GuardViolated naming the clause.
int scheme_lower_bound(BoundClause clause, const SchemeSizes& sizes, int r);

struct ClauseCheck {
    BoundClause clause;
    int bound = 0;
    int cycle_length = 0;
    bool passed = false;
    /// LemmaB/LemmaC at r in {2,3}: failures are logged for review, not counted.
    bool review_only = false;
};

struct SchemeAudit {
    std::vector<ClauseCheck> checks;

    /// No failing check outside the review-only set.
    bool all_passed() const;
};

/// Evaluates every clause whose guard holds.  `bound_shift` is a fault
/// injection hook added to every bound (0 in normal use).
/// Errors: InvalidScheme if the scheme is invalid, TrivialScheme if it has no SDR.
SchemeAudit audit_scheme_lemmas(const Scheme& s, int bound_shift = 0);

struct SweepOptions {
    int min_length = 3;
    int max_length = 14;
    int max_set_size = 3;
    int workers = 1;
    int bound_shift = 0;
};

struct SweepFinding {
    int cycle_length = 0;
    int r = 0;
    std::vector<VertexSet> zsets;
    ClauseCheck check;
};

struct SweepReport {
    std::uint64_t schemes_checked = 0;  ///< valid and nontrivial families audited
    std::uint64_t clause_checks = 0;
    std::vector<SweepFinding> violations;  ///< failures that count
    std::vector<SweepFinding> review_log;  ///< LemmaB/LemmaC failures at r in {2,3}
    std::uint64_t review_failures = 0;     ///< total review failures (log is truncated)

    bool clean() const { return violations.empty(); }
};

/// Exhaustive audit over cycles 0..L-1 (identity orientation) for
/// min_length <= L <= max_length, 2 <= r <= L/2, and families of p in {2,3,4}
/// sets with 1 <= |Z_i| <= max_set_size.
///
/// Symmetry reduction: rotations are factored out by requiring vertex 0 in
/// the union; for p = 3, 4 only families with |Z_3| = 1 (and |Z_4| = 1) are
/// generated since no clause applies otherwise, and Z_3 <= Z_4 for p = 4
/// because every four-set clause is symmetric in Z_3, Z_4.
SweepReport scheme_soundness_sweep(const SweepOptions& options);

}  // namespace cyclex
