#pragma once

#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

/// g + h: disjoint union with every cross edge.  Vertices of g keep their
/// labels, vertices of h are shifted by g.order().
Graph join(const Graph& g, const Graph& h);

/// k vertex-disjoint copies of g laid out consecutively (copy i occupies
/// i*n(g) .. (i+1)*n(g)-1).  Requires k >= 1.
Graph disjoint_copies(int k, const Graph& g);

/// tK_a + K̄_t with an extra clique K_b whose vertices are joined to kappa
/// vertices of the K̄_t part.
///
/// Layout (deterministic):
///   [0, t*a)            the t copies of K_a, block i at i*a .. i*a+a-1
///   [t*a, t*a+t)        the independent set K̄_t
///   [t*a+t, t*a+t+b)    the clique K_b
/// The attach vertices are the first kappa vertices of the K̄_t block.
/// K_b is added as a separate clique that meets the rest of the graph only
/// through those attach vertices.
///
/// Errors: InvalidParameter if kappa > t or any count is negative,
/// TooManyVertices if t*a+t+b exceeds the cap.
Graph construct_H(int a, int b, int t, int kappa);

struct InducedSubgraph {
    Graph graph;
    /// index_map[i] is the original label of new vertex i.
    std::vector<int> index_map;
};

/// Subgraph induced by s, relabelled to 0..|s|-1 in increasing label order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

}  // namespace cyclex
