#pragma once

#include <optional>
#include <vector>

#include "cyclex/graph.hpp"
#include "cyclex/search_budget.hpp"

namespace cyclex {

/// Cyclic vertex sequence; the edge back to the first vertex is implicit.
/// A single vertex counts as a cycle of length 1 and a single edge as a
/// cycle of length 2; both are flagged degenerate.
struct CycleSeq {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool degenerate() const { return vertices.size() < 3; }
    VertexSet vertex_set() const;

    friend bool operator==(const CycleSeq&, const CycleSeq&) = default;
};

struct PathSeq {
    std::vector<int> vertices;

    /// Number of edges.
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int first() const { return vertices.front(); }
    int last() const { return vertices.back(); }
    VertexSet vertex_set() const;

    friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

/// True if c is a cycle of g: distinct vertices, consecutive ones adjacent
/// (cyclically for length >= 3), degenerate forms included.
bool is_cycle_of(const Graph& g, const CycleSeq& c);
bool is_path_of(const Graph& g, const PathSeq& p);
/// c is a cycle of g and V(G) - V(C) is independent.
bool is_dominating_cycle(const Graph& g, const CycleSeq& c);

struct CircumferenceResult {
    int length = 0;
    std::optional<CycleSeq> witness;
};

/// Longest proper cycle (length >= 3); 0 and no witness for forests.
/// Among longest cycles the witness is the lexicographically smallest
/// sequence that starts at its minimum vertex.
CircumferenceResult circumference(const Graph& g, const SearchBudget& budget = {});

/// Longest proper cycle of the subgraph induced by `allowed`.  When
/// stop_at > 0 the search returns as soon as a cycle of length >= stop_at
/// is found.
CircumferenceResult longest_cycle_within(const Graph& g, VertexSet allowed, int stop_at,
                                         const SearchBudget& budget = {});

std::optional<CycleSeq> hamilton_cycle(const Graph& g, const SearchBudget& budget = {});
inline bool has_hamilton_cycle(const Graph& g, const SearchBudget& budget = {}) {
    return hamilton_cycle(g, budget).has_value();
}

enum class DominatingMode {
    AllowDegenerate,  ///< single vertices and edges count as cycles
    ProperOnly,       ///< only cycles of length >= 3
};

/// Search over independent sets I in increasing size (lex order within a
/// size) for one whose complement W = V - I carries a Hamilton cycle of
/// ⟨W⟩.  Returns that cycle, or nullopt.
std::optional<CycleSeq> find_dominating_cycle(const Graph& g, DominatingMode mode = DominatingMode::AllowDegenerate,
                                              const SearchBudget& budget = {});

/// Maximum number of edges on a u-v path.  Errors: InvalidParameter (u == v),
/// VertexOutOfRange, NoPath.
int longest_path_between(const Graph& g, int u, int v, const SearchBudget& budget = {});

}  // namespace cyclex
