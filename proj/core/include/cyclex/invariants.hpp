#pragma once

#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

struct InvariantRecord {
    int n = 0;
    int delta = 0;
    int kappa = 0;
    int alpha = 0;
    int edge_count = 0;

    friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

int min_degree(const Graph& g);

/// Vertex connectivity via unit-capacity max-flow on the vertex-split
/// network.  kappa(K_n) = n-1, kappa(disconnected) = 0.
int connectivity(const Graph& g);

/// Number of internally vertex-disjoint u-v paths for non-adjacent u, v,
/// stopping early once `limit` paths are found.
int local_connectivity(const Graph& g, int u, int v, int limit);

struct IndependentSet {
    int size = 0;
    VertexSet witness;
};

/// Maximum independent set by branch and bound; the bound is a greedy
/// clique cover of the candidate set.
IndependentSet maximum_independent_set(const Graph& g);
int independence_number(const Graph& g);

/// Every vertex set of size kappa(g) whose removal disconnects g, sorted
/// by lex_less.  Errors: Disconnected, CompleteGraph, EmptyGraph.
std::vector<VertexSet> minimum_cutsets(const Graph& g);

struct Neighborhood {
    VertexSet boundary;  ///< N(X)
    VertexSet hat;       ///< V - (X ∪ N(X))
};

Neighborhood neighborhood_and_hat(const Graph& g, VertexSet x);

/// All of δ, κ, α and the edge count.  EmptyGraph on n = 0.
InvariantRecord compute_invariants(const Graph& g);

// Small helpers shared across modules.
bool is_independent(const Graph& g, VertexSet s);
/// Vertices reachable from `from` inside `within` (from must be in within).
VertexSet reachable(const Graph& g, int from, VertexSet within);
bool is_connected(const Graph& g, VertexSet within);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }
std::vector<VertexSet> components(const Graph& g, VertexSet within);
bool is_complete(const Graph& g);

}  // namespace cyclex
