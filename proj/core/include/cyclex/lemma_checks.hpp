#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclex/path_systems.hpp"

namespace cyclex {

/// Statement checks built on the exact path-system searches.
///   L5, L6   A↑ - V↑ independence for every optimal up-system
///   L7       A↓ covered by V↓ (and by Q↓*) for small endfragments
///   D1..D3   small endfragment clauses, split by f = |V↓ ∩ S|
///   E1..E3   large endfragment clauses, split the same way
///   F1..F3   lower bounds on |V↑| and |V↓| when the leftover is independent
///   LD       cycles through independent separator edges inside ⟨A↓ ∪ V(L)⟩
///   LF       A↓ - V↓ independence for |A↓| <= 3δ-3κ
enum class LemmaClause { L5, L6, L7, D1, D2, D3, E1, E2, E3, F1, F2, F3, LD, LF };

inline constexpr LemmaClause kAllLemmaClauses[] = {
    LemmaClause::L5, LemmaClause::L6, LemmaClause::L7, LemmaClause::D1, LemmaClause::D2,
    LemmaClause::D3, LemmaClause::E1, LemmaClause::E2, LemmaClause::E3, LemmaClause::F1,
    LemmaClause::F2, LemmaClause::F3, LemmaClause::LD, LemmaClause::LF,
};

std::string_view to_string(LemmaClause clause);
std::optional<LemmaClause> parse_lemma_clause(std::string_view name);

struct ClauseResult {
    LemmaClause clause;
    FragmentSides sides;
    bool applicable = false;
    bool holds = true;
    std::string detail;
};

struct LemmaReport {
    std::vector<ClauseResult> results;  ///< applicable instances only
    /// Orientations whose searches hit a cap or budget.
    int skipped = 0;

    bool all_hold() const;
    bool exercised(LemmaClause clause) const;
};

/// Evaluates every clause on every fragment orientation of g (each fragment
/// named both ways on size ties).  Disconnected, complete and trivial graphs
/// give an empty report.
LemmaReport check_lemmas(const Graph& g, const PathSystemLimits& limits = {});

/// True iff ⟨within⟩ has a cycle through every edge of `edges` (a matching
/// inside `within`).
bool has_cycle_through_edges(const Graph& g, VertexSet within, const std::vector<Edge>& edges,
                             const SearchBudget& budget = {});

struct LemmaECheck {
    bool applicable = false;  ///< hamiltonian, n >= 3
    bool holds = true;
    /// Largest r with at least r vertices of degree >= r.
    int r = 0;
    std::optional<std::pair<int, int>> failing_pair;
};

/// Every pair of vertices of a hamiltonian graph is joined by a path of
/// length >= r, checked for the largest admissible r.
LemmaECheck check_lemma_e(const Graph& g, const SearchBudget& budget = {});

}  // namespace cyclex
