#include "cyclex/constructions.hpp"

#include <string>

#include "cyclex/error.hpp"

namespace cyclex {

namespace {

void check_total(long long total) {
    if (total > kMaxVertices) {
        throw Error(ErrorCode::TooManyVertices,
                    "construction needs " + std::to_string(total) + " vertices, cap is " +
                        std::to_string(kMaxVertices));
    }
}

void check_nonnegative(int value, const char* name) {
    if (value < 0) throw Error(ErrorCode::InvalidParameter, std::string(name) + " must be non-negative");
}

VertexSet block(int start, int size) { return VertexSet(VertexSet::range(start + size).bits() & ~VertexSet::range(start).bits()); }

}  // namespace

Graph complete_graph(int n) {
    check_nonnegative(n, "n");
    return GraphBuilder(n).make_clique(VertexSet::range(n)).build();
}

Graph empty_graph(int n) {
    check_nonnegative(n, "n");
    return Graph(n);
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidParameter, "cycle needs at least 3 vertices");
    GraphBuilder builder(n);
    for (int i = 0; i < n; ++i) builder.add_edge(i, (i + 1) % n);
    return builder.build();
}

Graph path_graph(int n) {
    check_nonnegative(n, "n");
    GraphBuilder builder(n);
    for (int i = 0; i + 1 < n; ++i) builder.add_edge(i, i + 1);
    return builder.build();
}

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph petersen_graph() {
    GraphBuilder builder(10);
    for (int i = 0; i < 5; ++i) {
        builder.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        builder.add_edge(i, i + 5);                // spokes
        builder.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return builder.build();
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order();
    check_total(static_cast<long long>(n) + h.order());
    GraphBuilder builder(n + h.order());
    for (auto [u, v] : g.edges()) builder.add_edge(u, v);
    for (auto [u, v] : h.edges()) builder.add_edge(u + n, v + n);
    builder.connect(block(0, n), block(n, h.order()));
    return builder.build();
}

Graph disjoint_copies(int k, const Graph& g) {
    if (k < 1) throw Error(ErrorCode::InvalidParameter, "need at least one copy");
    const int n = g.order();
    check_total(static_cast<long long>(k) * n);
    GraphBuilder builder(k * n);
    const auto edges = g.edges();
    for (int copy = 0; copy < k; ++copy) {
        for (auto [u, v] : edges) builder.add_edge(copy * n + u, copy * n + v);
    }
    return builder.build();
}

Graph construct_H(int a, int b, int t, int kappa) {
    check_nonnegative(a, "a");
    check_nonnegative(b, "b");
    check_nonnegative(t, "t");
    check_nonnegative(kappa, "kappa");
    if (kappa > t) {
        throw Error(ErrorCode::InvalidParameter,
                    "kappa=" + std::to_string(kappa) + " exceeds t=" + std::to_string(t));
    }
    check_total(static_cast<long long>(t) * a + t + b);

    const Graph base = join(t > 0 ? disjoint_copies(t, complete_graph(a)) : Graph(0), empty_graph(t));
    const int independent_start = t * a;
    const int clique_start = independent_start + t;
    GraphBuilder builder(clique_start + b);
    for (auto [u, v] : base.edges()) builder.add_edge(u, v);
    builder.make_clique(block(clique_start, b));
    builder.connect(block(independent_start, kappa), block(clique_start, b));
    return builder.build();
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) {
        throw Error(ErrorCode::VertexOutOfRange, "subset " + s.to_string() + " not inside graph");
    }
    InducedSubgraph out{Graph(s.size()), s.to_vector()};
    std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.index_map.size(); ++i) position[out.index_map[i]] = static_cast<int>(i);
    GraphBuilder builder(s.size());
    for (int u : s) {
        for (int v : g.neighbors(u) & s) {
            if (u < v) builder.add_edge(position[u], position[v]);
        }
    }
    out.graph = builder.build();
    return out;
}

}  // namespace cyclex
