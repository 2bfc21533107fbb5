#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cyclex/vertex_set.hpp"

namespace cyclex {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1 with bitset rows.
///
/// Graphs are values: every operation that "changes" a graph returns a new
/// one, so a Graph may be shared freely between threads.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.  Throws TooManyVertices if n > kMaxVertices.
    explicit Graph(int n);
    /// Throws on out-of-range endpoints or self-loops; duplicate edges collapse.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return static_cast<int>(rows_.size()); }
    int edge_count() const { return edges_; }
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].size(); }
    bool adjacent(int u, int v) const { return rows_[u].contains(v); }
    /// Union of neighbourhoods of the members of s (members included if adjacent to each other).
    VertexSet neighbors_of(VertexSet s) const;

    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    std::vector<VertexSet> rows_;
    int edges_ = 0;
};

/// Mutable staging area for building a Graph edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& connect(VertexSet a, VertexSet b);
    GraphBuilder& make_clique(VertexSet s);
    int order() const { return static_cast<int>(rows_.size()); }
    Graph build() const;

private:
    std::vector<VertexSet> rows_;
};

}  // namespace cyclex
