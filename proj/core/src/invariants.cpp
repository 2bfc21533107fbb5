#include "cyclex/invariants.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "cyclex/error.hpp"

namespace cyclex {

namespace {

void require_nonempty(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
}

/// Unit vertex-capacity flow network on the split graph.  Node 2v is the
/// "in" copy of v and 2v+1 the "out" copy.
class SplitNetwork {
public:
    SplitNetwork(const Graph& g, int source, int sink) : nodes_(2 * g.order()) {
        capacity_.assign(static_cast<std::size_t>(nodes_) * nodes_, 0);
        constexpr int kWide = std::numeric_limits<int>::max() / 4;
        for (int v = 0; v < g.order(); ++v) {
            cap(2 * v, 2 * v + 1) = (v == source || v == sink) ? kWide : 1;
            for (int w : g.neighbors(v)) cap(2 * v + 1, 2 * w) = kWide;
        }
        source_ = 2 * source + 1;
        sink_ = 2 * sink;
    }

    int max_flow(int limit) {
        int flow = 0;
        std::vector<int> parent(static_cast<std::size_t>(nodes_));
        std::vector<int> queue;
        queue.reserve(static_cast<std::size_t>(nodes_));
        while (flow < limit) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[source_] = source_;
            queue.clear();
            queue.push_back(source_);
            for (std::size_t head = 0; head < queue.size() && parent[sink_] < 0; ++head) {
                const int x = queue[head];
                for (int y = 0; y < nodes_; ++y) {
                    if (parent[y] < 0 && cap(x, y) > 0) {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if (parent[sink_] < 0) break;
            for (int y = sink_; y != source_; y = parent[y]) {
                cap(parent[y], y) -= 1;
                cap(y, parent[y]) += 1;
            }
            ++flow;
        }
        return flow;
    }

private:
    int& cap(int x, int y) { return capacity_[static_cast<std::size_t>(x) * nodes_ + y]; }

    int nodes_;
    int source_ = 0;
    int sink_ = 0;
    std::vector<int> capacity_;
};

struct IndependentSetSearch {
    const Graph& g;
    IndependentSet best;

    void expand(VertexSet candidates, VertexSet current) {
        // Greedy clique cover: vertices in the same clique are pairwise
        // adjacent, so an independent set takes at most one per clique.
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> bound{};
        int count = 0;
        int cliques = 0;
        VertexSet uncovered = candidates;
        while (!uncovered.empty()) {
            ++cliques;
            VertexSet open = uncovered;
            while (!open.empty()) {
                const int v = open.first();
                open &= g.neighbors(v);
                uncovered.erase(v);
                order[count] = v;
                bound[count] = cliques;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (current.size() + bound[i] <= best.size) return;
            const int v = order[i];
            VertexSet next = current;
            next.insert(v);
            const VertexSet rest = candidates - g.neighbors(v) - VertexSet::single(v);
            if (rest.empty()) {
                if (next.size() > best.size) best = {next.size(), next};
            } else {
                expand(rest, next);
            }
            candidates.erase(v);
        }
    }
};

}  // namespace

int min_degree(const Graph& g) {
    require_nonempty(g);
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

VertexSet reachable(const Graph& g, int from, VertexSet within) {
    VertexSet seen = VertexSet::single(from);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        const VertexSet next = (g.neighbors_of(frontier) & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected(const Graph& g, VertexSet within) {
    if (within.empty()) return true;
    return reachable(g, within.first(), within) == within;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    while (!within.empty()) {
        const VertexSet part = reachable(g, within.first(), within);
        out.push_back(part);
        within -= part;
    }
    return out;
}

bool is_complete(const Graph& g) {
    const long long n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s) {
        if (g.neighbors(v).intersects(s)) return false;
    }
    return true;
}

int local_connectivity(const Graph& g, int u, int v, int limit) {
    SplitNetwork network(g, u, v);
    return network.max_flow(limit);
}

int connectivity(const Graph& g) {
    require_nonempty(g);
    const int n = g.order();
    if (!is_connected(g)) return 0;
    if (is_complete(g)) return n - 1;
    int best = min_degree(g);
    // Some vertex among the first best+1 lies outside any minimum separator.
    for (int i = 0; i <= best && i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            best = std::min(best, local_connectivity(g, i, j, best));
        }
    }
    return best;
}

IndependentSet maximum_independent_set(const Graph& g) {
    require_nonempty(g);
    IndependentSetSearch search{g, {1, VertexSet::single(0)}};
    search.expand(g.vertices(), {});
    return search.best;
}

int independence_number(const Graph& g) { return maximum_independent_set(g).size; }

std::vector<VertexSet> minimum_cutsets(const Graph& g) {
    require_nonempty(g);
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "minimum cut-sets need a connected graph");
    if (is_complete(g)) throw Error(ErrorCode::CompleteGraph, "complete graphs have no cut-set");
    const int kappa = connectivity(g);
    const VertexSet all = g.vertices();
    std::vector<VertexSet> out;

    // Each member of a minimum cut-set has a neighbour in every component
    // of G - S, hence at least two neighbours outside S.
    auto viable = [&](VertexSet s) {
        for (int v : s) {
            if ((g.neighbors(v) - s).size() < 2) return false;
        }
        return true;
    };
    auto choose = [&](auto&& self, int next, VertexSet chosen) -> void {
        if (chosen.size() == kappa) {
            if (viable(chosen) && !is_connected(g, all - chosen)) out.push_back(chosen);
            return;
        }
        const int missing = kappa - chosen.size();
        for (int v = next; v <= g.order() - missing; ++v) {
            VertexSet with = chosen;
            with.insert(v);
            self(self, v + 1, with);
        }
    };
    choose(choose, 0, {});
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

Neighborhood neighborhood_and_hat(const Graph& g, VertexSet x) {
    if (!x.is_subset_of(g.vertices())) {
        throw Error(ErrorCode::VertexOutOfRange, "set " + x.to_string() + " not inside graph");
    }
    const VertexSet boundary = g.neighbors_of(x) - x;
    return {boundary, g.vertices() - x - boundary};
}

InvariantRecord compute_invariants(const Graph& g) {
    require_nonempty(g);
    return {g.order(), min_degree(g), connectivity(g), independence_number(g), g.edge_count()};
}

}  // namespace cyclex
