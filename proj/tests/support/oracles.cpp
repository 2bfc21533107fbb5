#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cyclex::testing {

namespace {

std::uint64_t adj_mask(const Graph& g, int v) {
    std::uint64_t m = 0;
    for (int u = 0; u < g.order(); ++u) {
        if (g.adjacent(v, u)) m |= std::uint64_t{1} << u;
    }
    return m;
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

bool independent(const Graph& g, std::uint64_t s) {
    for (int v = 0; v < g.order(); ++v) {
        if ((s >> v & 1) && (adj_mask(g, v) & s)) return false;
    }
    return true;
}

std::uint64_t neighbourhood(const Graph& g, std::uint64_t x) {
    std::uint64_t out = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (x >> v & 1) out |= adj_mask(g, v);
    }
    return out & ~x;
}

}  // namespace

int brute_min_degree(const Graph& g) {
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, std::popcount(adj_mask(g, v)));
    return best;
}

bool brute_connected(const Graph& g, std::uint64_t within) {
    if (within == 0) return true;
    std::uint64_t seen = within & (~within + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (frontier >> v & 1) next |= adj_mask(g, v);
        }
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == within;
}

int brute_connectivity(const Graph& g) {
    const int n = g.order();
    const std::uint64_t all = full_mask(n);
    for (int k = 0; k < n; ++k) {
        for (std::uint64_t s = 0; s <= all; ++s) {
            if (std::popcount(s) != k) continue;
            const std::uint64_t rest = all & ~s;
            if (std::popcount(rest) <= 1 || !brute_connected(g, rest)) return k;
        }
    }
    return std::max(0, n - 1);
}

int brute_alpha(const Graph& g) {
    int best = 0;
    for (std::uint64_t s = 0; s <= full_mask(g.order()); ++s) {
        if (std::popcount(s) > best && independent(g, s)) best = std::popcount(s);
    }
    return best;
}

std::vector<std::uint64_t> brute_min_cutsets(const Graph& g) {
    const int n = g.order();
    const int k = brute_connectivity(g);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s <= full_mask(n); ++s) {
        if (std::popcount(s) != k) continue;
        const std::uint64_t rest = full_mask(n) & ~s;
        if (std::popcount(rest) >= 2 && !brute_connected(g, rest)) out.push_back(s);
    }
    return out;
}

int permutation_circumference(const Graph& g) {
    const int n = g.order();
    if (n < 3) return 0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        // Each cycle is read off starting at its smallest vertex, so a start
        // with at most best larger vertices cannot improve.
        const int start = perm[0];
        if (n - start <= best) break;
        // Longest prefix that is a path through vertices above the start.
        int k = 1;
        while (k < n && perm[static_cast<std::size_t>(k)] > start &&
               g.adjacent(perm[static_cast<std::size_t>(k - 1)], perm[static_cast<std::size_t>(k)])) {
            ++k;
        }
        for (int len = std::max(3, best + 1); len <= k; ++len) {
            if (g.adjacent(perm[static_cast<std::size_t>(len - 1)], perm[0])) best = len;
        }
        if (best == n) break;
        // Skip every permutation sharing the broken prefix perm[0..k].
        if (k < n) std::sort(perm.begin() + k + 1, perm.end(), std::greater<int>());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool held_karp_hamiltonian(const Graph& g, std::uint64_t mask) {
    const int size = std::popcount(mask);
    if (size < 3) return false;
    std::vector<int> vs;
    for (int v = 0; v < g.order(); ++v) {
        if (mask >> v & 1) vs.push_back(v);
    }
    const int k = size;
    // reach[sub] = set of end positions of paths from vs[0] covering sub.
    std::vector<std::uint32_t> reach(std::size_t{1} << k, 0);
    reach[1] = 1;
    for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << k); ++sub) {
        if (!(sub & 1) || reach[sub] == 0) continue;
        for (int e = 0; e < k; ++e) {
            if (!(reach[sub] >> e & 1)) continue;
            for (int u = 1; u < k; ++u) {
                if (sub >> u & 1) continue;
                if (g.adjacent(vs[static_cast<std::size_t>(e)], vs[static_cast<std::size_t>(u)])) {
                    reach[sub | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
                }
            }
        }
    }
    const std::uint32_t all = (std::uint32_t{1} << k) - 1;
    for (int e = 1; e < k; ++e) {
        if ((reach[all] >> e & 1) && g.adjacent(vs[static_cast<std::size_t>(e)], vs[0])) return true;
    }
    return false;
}

int held_karp_circumference(const Graph& g) {
    int best = 0;
    for (std::uint64_t s = 0; s <= full_mask(g.order()); ++s) {
        const int size = std::popcount(s);
        if (size > best && held_karp_hamiltonian(g, s)) best = size;
    }
    return best;
}

bool brute_has_dominating_cycle(const Graph& g, bool allow_degenerate) {
    const int n = g.order();
    const std::uint64_t all = full_mask(n);
    for (std::uint64_t w = 1; w <= all; ++w) {
        if (!independent(g, all & ~w)) continue;
        const int size = std::popcount(w);
        if (size == 1 && allow_degenerate) return true;
        if (size == 2 && allow_degenerate) {
            const int a = std::countr_zero(w);
            const int b = 63 - std::countl_zero(w);
            if (g.adjacent(a, b)) return true;
        }
        if (size >= 3 && held_karp_hamiltonian(g, w)) return true;
    }
    return false;
}

std::vector<std::uint64_t> brute_fragments(const Graph& g) {
    const int n = g.order();
    const int k = brute_connectivity(g);
    const std::uint64_t all = full_mask(n);
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x < all; ++x) {
        const std::uint64_t nx = neighbourhood(g, x);
        if (std::popcount(nx) != k) continue;
        if ((all & ~(x | nx)) == 0) continue;
        out.push_back(x);
    }
    return out;
}

std::vector<std::uint64_t> brute_endfragments(const Graph& g) {
    const std::vector<std::uint64_t> frags = brute_fragments(g);
    std::vector<std::uint64_t> out;
    for (std::uint64_t x : frags) {
        const bool minimal = std::none_of(frags.begin(), frags.end(), [&](std::uint64_t y) {
            return y != x && (y & ~x) == 0;
        });
        if (minimal) out.push_back(x);
    }
    return out;
}

namespace {

void longest_dfs(const Graph& g, int v, int target, std::uint64_t visited, int length, int& best) {
    if (v == target) {
        best = std::max(best, length);
        return;
    }
    for (int w = 0; w < g.order(); ++w) {
        if (!(visited >> w & 1) && g.adjacent(v, w)) {
            longest_dfs(g, w, target, visited | (std::uint64_t{1} << w), length + 1, best);
        }
    }
}

void all_paths(const Graph& g, std::uint64_t within, std::uint64_t sep, int v, std::uint64_t visited, int start,
               std::vector<std::uint64_t>& out) {
    if (v != start && (sep >> v & 1) && v > start) out.push_back(visited);
    for (int w = 0; w < g.order(); ++w) {
        if ((within >> w & 1) && !(visited >> w & 1) && g.adjacent(v, w)) {
            all_paths(g, within, sep, w, visited | (std::uint64_t{1} << w), start, out);
        }
    }
}

int pack(const std::vector<std::uint64_t>& paths, std::size_t from, std::uint64_t used) {
    int best = 0;
    for (std::size_t i = from; i < paths.size(); ++i) {
        if (paths[i] & used) continue;
        best = std::max(best, std::popcount(paths[i]) + pack(paths, i + 1, used | paths[i]));
    }
    return best;
}

}  // namespace

int brute_longest_path(const Graph& g, int u, int v) {
    int best = -1;
    longest_dfs(g, u, v, std::uint64_t{1} << u, 0, best);
    return best;
}

int brute_up_system_value(const Graph& g, const FragmentSides& sides) {
    const std::uint64_t within = (sides.up | sides.separator).bits();
    const std::uint64_t sep = sides.separator.bits();
    std::vector<std::uint64_t> paths;
    for (int s = 0; s < g.order(); ++s) {
        if (sep >> s & 1) all_paths(g, within, sep, s, std::uint64_t{1} << s, s, paths);
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    return pack(paths, 0, 0);
}

bool brute_sdr(const std::vector<std::vector<int>>& family) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == family.size()) return true;
        for (int x : family[i]) {
            if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
            chosen.push_back(x);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (coin(rng)) edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

Graph random_hamiltonian_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges = random_graph(n, p, rng).edges();
    for (int i = 0; i < n; ++i) {
        const int a = order[static_cast<std::size_t>(i)];
        const int b = order[static_cast<std::size_t>((i + 1) % n)];
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, edges);
}

}  // namespace cyclex::testing
