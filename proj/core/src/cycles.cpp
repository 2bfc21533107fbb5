#include "cyclex/cycles.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cyclex/error.hpp"
#include "cyclex/invariants.hpp"

namespace cyclex {

namespace {

VertexSet set_of(const std::vector<int>& vertices) {
    VertexSet out;
    for (int v : vertices) out.insert(v);
    return out;
}

VertexSet at_least(int s) { return VertexSet(~VertexSet::range(s).bits()); }

class LongestCycleSearch {
public:
    LongestCycleSearch(const Graph& g, int stop_at, const SearchBudget& budget)
        : g_(g), stop_at_(stop_at), meter_(budget) {}

    CircumferenceResult run(VertexSet allowed) {
        for (int s : allowed) {
            if (done()) break;
            const VertexSet pool = reachable(g_, s, allowed & at_least(s));
            if (pool.size() < 3 || pool.size() <= best_) continue;
            start_ = s;
            pool_ = pool;
            path_.assign(1, s);
            extend(s, VertexSet::single(s));
        }
        CircumferenceResult out;
        out.length = best_;
        if (best_ > 0) out.witness = CycleSeq{best_path_};
        return out;
    }

private:
    bool done() const { return stop_at_ > 0 && best_ >= stop_at_; }

    void extend(int v, VertexSet visited) {
        meter_.tick();
        const int k = static_cast<int>(path_.size());
        if (k >= 3 && g_.adjacent(v, start_) && k > best_) {
            best_ = k;
            best_path_ = path_;
            if (done()) return;
        }
        const VertexSet open = pool_ - visited;
        const VertexSet ahead = reachable(g_, v, open | VertexSet::single(v)) - VertexSet::single(v);
        if (k + ahead.size() <= best_) return;
        if (!ahead.intersects(g_.neighbors(start_))) return;
        for (int w : g_.neighbors(v) & open) {
            path_.push_back(w);
            VertexSet next = visited;
            next.insert(w);
            extend(w, next);
            path_.pop_back();
            if (done()) return;
        }
    }

    const Graph& g_;
    int stop_at_;
    BudgetMeter meter_;
    int start_ = 0;
    VertexSet pool_;
    std::vector<int> path_;
    int best_ = 0;
    std::vector<int> best_path_;
};

class LongestPathSearch {
public:
    LongestPathSearch(const Graph& g, int target, const SearchBudget& budget)
        : g_(g), target_(target), meter_(budget) {}

    void extend(int v, VertexSet visited, int length) {
        meter_.tick();
        if (v == target_) {
            best_ = std::max(best_, length);
            return;
        }
        const VertexSet open = g_.vertices() - visited;
        const VertexSet ahead = reachable(g_, v, open | VertexSet::single(v));
        if (!ahead.contains(target_)) return;
        if (length + ahead.size() - 1 <= best_) return;
        for (int w : g_.neighbors(v) & open) {
            VertexSet next = visited;
            next.insert(w);
            extend(w, next, length + 1);
        }
    }

    int best() const { return best_; }

private:
    const Graph& g_;
    int target_;
    BudgetMeter meter_;
    int best_ = -1;
};

}  // namespace

VertexSet CycleSeq::vertex_set() const { return set_of(vertices); }
VertexSet PathSeq::vertex_set() const { return set_of(vertices); }

bool is_cycle_of(const Graph& g, const CycleSeq& c) {
    const int k = c.length();
    if (k == 0) return false;
    for (int v : c.vertices) {
        if (v < 0 || v >= g.order()) return false;
    }
    if (c.vertex_set().size() != k) return false;
    if (k == 1) return true;
    if (k == 2) return g.adjacent(c.vertices[0], c.vertices[1]);
    for (int i = 0; i < k; ++i) {
        if (!g.adjacent(c.vertices[static_cast<std::size_t>(i)], c.vertices[static_cast<std::size_t>((i + 1) % k)])) {
            return false;
        }
    }
    return true;
}

bool is_path_of(const Graph& g, const PathSeq& p) {
    if (p.vertices.empty()) return false;
    for (int v : p.vertices) {
        if (v < 0 || v >= g.order()) return false;
    }
    if (p.vertex_set().size() != static_cast<int>(p.vertices.size())) return false;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
    }
    return true;
}

bool is_dominating_cycle(const Graph& g, const CycleSeq& c) {
    return is_cycle_of(g, c) && is_independent(g, g.vertices() - c.vertex_set());
}

CircumferenceResult longest_cycle_within(const Graph& g, VertexSet allowed, int stop_at, const SearchBudget& budget) {
    LongestCycleSearch search(g, stop_at, budget);
    return search.run(allowed & g.vertices());
}

CircumferenceResult circumference(const Graph& g, const SearchBudget& budget) {
    return longest_cycle_within(g, g.vertices(), 0, budget);
}

namespace {

std::optional<CycleSeq> hamilton_cycle_within(const Graph& g, VertexSet w, const SearchBudget& budget) {
    if (w.size() < 3) return std::nullopt;
    for (int v : w) {
        if ((g.neighbors(v) & w).size() < 2) return std::nullopt;
    }
    if (!is_connected(g, w)) return std::nullopt;
    CircumferenceResult found = longest_cycle_within(g, w, w.size(), budget);
    if (found.length == w.size()) return found.witness;
    return std::nullopt;
}

}  // namespace

std::optional<CycleSeq> hamilton_cycle(const Graph& g, const SearchBudget& budget) {
    return hamilton_cycle_within(g, g.vertices(), budget);
}

std::optional<CycleSeq> find_dominating_cycle(const Graph& g, DominatingMode mode, const SearchBudget& budget) {
    if (g.order() == 0) return std::nullopt;
    BudgetMeter meter(budget);

    // Independent sets grouped by size, each group in lex order.
    std::map<int, std::vector<VertexSet>> by_size;
    auto collect = [&](auto&& self, int next, VertexSet chosen, VertexSet blocked) -> void {
        meter.tick();
        by_size[chosen.size()].push_back(chosen);
        for (int v = next; v < g.order(); ++v) {
            if (blocked.contains(v)) continue;
            VertexSet with = chosen;
            with.insert(v);
            self(self, v + 1, with, blocked | g.neighbors(v));
        }
    };
    collect(collect, 0, {}, {});

    for (auto& [size, sets] : by_size) {
        std::sort(sets.begin(), sets.end(), LexLess{});
        for (VertexSet independent : sets) {
            const VertexSet w = g.vertices() - independent;
            if (w.size() >= 3) {
                if (auto cycle = hamilton_cycle_within(g, w, budget)) return cycle;
            } else if (mode == DominatingMode::AllowDegenerate) {
                if (w.size() == 1) return CycleSeq{{w.first()}};
                if (w.size() == 2) {
                    const std::vector<int> pair = w.to_vector();
                    if (g.adjacent(pair[0], pair[1])) return CycleSeq{pair};
                }
            }
        }
    }
    return std::nullopt;
}

int longest_path_between(const Graph& g, int u, int v, const SearchBudget& budget) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
        throw Error(ErrorCode::VertexOutOfRange, "endpoint outside graph");
    }
    if (u == v) throw Error(ErrorCode::InvalidParameter, "endpoints must differ");
    if (!reachable(g, u, g.vertices()).contains(v)) {
        throw Error(ErrorCode::NoPath, "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are disconnected");
    }
    LongestPathSearch search(g, v, budget);
    search.extend(u, VertexSet::single(u), 0);
    return search.best();
}

}  // namespace cyclex
