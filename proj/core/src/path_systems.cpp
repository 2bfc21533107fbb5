#include "cyclex/path_systems.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "cyclex/error.hpp"
#include "cyclex/invariants.hpp"

namespace cyclex {

namespace {

constexpr int kHardVertexCap = 20;

// Hamiltonian-path tables over the vertices of ⟨A↑ ∪ S⟩ renumbered 0..k-1.
class UpTables {
public:
    UpTables(const Graph& g, const FragmentSides& sides, const PathSystemLimits& limits) : g_(g) {
        const VertexSet u = sides.up | sides.separator;
        if (u.size() > std::min(limits.vertex_cap, kHardVertexCap)) {
            throw Error(ErrorCode::SearchCapExceeded,
                        "up side has " + std::to_string(u.size()) + " vertices, cap is " +
                            std::to_string(std::min(limits.vertex_cap, kHardVertexCap)));
        }
        local_ = u.to_vector();
        k_ = static_cast<int>(local_.size());
        full_ = (std::uint32_t{1} << k_) - 1;
        adj_.assign(static_cast<std::size_t>(k_), 0);
        for (int i = 0; i < k_; ++i) {
            if (sides.separator.contains(local_[static_cast<std::size_t>(i)])) sep_ |= std::uint32_t{1} << i;
            for (int j = 0; j < k_; ++j) {
                if (g.adjacent(local_[static_cast<std::size_t>(i)], local_[static_cast<std::size_t>(j)])) {
                    adj_[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
                }
            }
        }
        build_ends();
        build_cover();
    }

    int best() const { return best_; }
    int k() const { return k_; }
    std::uint32_t full() const { return full_; }
    bool covers(std::uint32_t w) const { return cover_[w] != 0; }

    // Endpoint pairs (s < t, both in S) of Hamilton paths of ⟨block⟩.
    std::vector<std::pair<int, int>> end_pairs(std::uint32_t block) const {
        std::vector<std::pair<int, int>> out;
        for (int s = 0; s < k_; ++s) {
            if (!(block >> s & 1) || !(sep_ >> s & 1)) continue;
            const std::uint32_t reach = ends_[index(s, block)];
            for (int t = s + 1; t < k_; ++t) {
                if ((sep_ >> t & 1) && (reach >> t & 1)) out.emplace_back(s, t);
            }
        }
        return out;
    }

    bool valid_block(std::uint32_t block) const { return valid_[block] != 0; }

    PathSeq path(std::uint32_t block, int s, int t) const {
        std::vector<int> seq{t};
        std::uint32_t mask = block;
        int cur = t;
        while (mask != (std::uint32_t{1} << s)) {
            const std::uint32_t rest = mask & ~(std::uint32_t{1} << cur);
            int prev = -1;
            for (int u = 0; u < k_; ++u) {
                if ((adj_[static_cast<std::size_t>(cur)] & rest) >> u & 1) {
                    if (ends_[index(s, rest)] >> u & 1) {
                        prev = u;
                        break;
                    }
                }
            }
            mask = rest;
            cur = prev;
            seq.push_back(cur);
        }
        std::reverse(seq.begin(), seq.end());
        PathSeq out;
        for (int i : seq) out.vertices.push_back(local_[static_cast<std::size_t>(i)]);
        return out;
    }

private:
    std::size_t index(int s, std::uint32_t mask) const {
        return (static_cast<std::size_t>(s) << k_) | mask;
    }

    void build_ends() {
        ends_.assign(static_cast<std::size_t>(k_) << k_, 0);
        for (int s = 0; s < k_; ++s) {
            if (!(sep_ >> s & 1)) continue;
            const std::uint32_t bit = std::uint32_t{1} << s;
            ends_[index(s, bit)] = bit;
            for (std::uint32_t mask = bit; mask <= full_; ++mask) {
                if (!(mask & bit)) continue;
                const std::uint32_t reach = ends_[index(s, mask)];
                for (int e = 0; e < k_; ++e) {
                    if (!(reach >> e & 1)) continue;
                    const std::uint32_t step = adj_[static_cast<std::size_t>(e)] & ~mask;
                    for (int u = 0; u < k_; ++u) {
                        if (step >> u & 1) ends_[index(s, mask | (std::uint32_t{1} << u))] |= std::uint32_t{1} << u;
                    }
                }
                if (mask == full_) break;
            }
        }
        valid_.assign(static_cast<std::size_t>(full_) + 1, 0);
        for (std::uint32_t block = 1; block <= full_; ++block) {
            if (std::popcount(block) >= 2 && !end_pairs(block).empty()) valid_[block] = 1;
            if (block == full_) break;
        }
    }

    void build_cover() {
        cover_.assign(static_cast<std::size_t>(full_) + 1, 0);
        cover_[0] = 1;
        for (std::uint32_t w = 1; w <= full_; ++w) {
            const std::uint32_t low = w & (~w + 1);
            const std::uint32_t rest = w ^ low;
            // Subsets of rest, including rest itself and the empty set.
            for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
                const std::uint32_t block = sub | low;
                if (valid_[block] && cover_[w ^ block]) {
                    cover_[w] = 1;
                    break;
                }
                if (sub == 0) break;
            }
            if (cover_[w]) best_ = std::max(best_, std::popcount(w));
            if (w == full_) break;
        }
    }

    const Graph& g_;
    std::vector<int> local_;
    int k_ = 0;
    std::uint32_t full_ = 0;
    std::uint32_t sep_ = 0;
    std::vector<std::uint32_t> adj_;
    std::vector<std::uint32_t> ends_;
    std::vector<std::uint8_t> valid_;
    std::vector<std::uint8_t> cover_;
    int best_ = 0;
};

UpSystem finish(std::vector<PathSeq> paths, const FragmentSides& sides) {
    UpSystem out;
    out.paths = std::move(paths);
    for (const PathSeq& p : out.paths) out.vset = out.vset | p.vertex_set();
    out.degenerate = !out.vset.intersects(sides.up);
    return out;
}

// Enumerates partitions of `w` into valid blocks, each with every end pair.
// `emit` returns false to stop.
template <class Emit>
bool enumerate_partitions(const UpTables& t, std::uint32_t w, std::vector<PathSeq>& acc, BudgetMeter& meter,
                          Emit&& emit) {
    meter.tick();
    if (w == 0) return emit(acc);
    const std::uint32_t low = w & (~w + 1);
    const std::uint32_t rest = w ^ low;
    // Ascending block order keeps the enumeration deterministic.
    std::vector<std::uint32_t> blocks;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        const std::uint32_t block = sub | low;
        if (t.valid_block(block) && t.covers(w ^ block)) blocks.push_back(block);
        if (sub == 0) break;
    }
    std::sort(blocks.begin(), blocks.end());
    for (std::uint32_t block : blocks) {
        for (auto [s, e] : t.end_pairs(block)) {
            acc.push_back(t.path(block, s, e));
            const bool more = enumerate_partitions(t, w ^ block, acc, meter, emit);
            acc.pop_back();
            if (!more) return false;
        }
    }
    return true;
}

template <class Emit>
void enumerate_optima(const Graph& g, const FragmentSides& sides, const PathSystemLimits& limits, Emit&& emit) {
    UpTables tables(g, sides, limits);
    if (tables.best() == 0) {
        throw Error(ErrorCode::NoValidSystem, "no path with both ends in the separator");
    }
    BudgetMeter meter(limits.budget);
    std::vector<PathSeq> acc;
    for (std::uint32_t w = 1; w <= tables.full(); ++w) {
        if (std::popcount(w) == tables.best() && tables.covers(w)) {
            if (!enumerate_partitions(tables, w, acc, meter, emit)) return;
        }
        if (w == tables.full()) break;
    }
}

struct Terminal {
    int path = -1;
    int other = -1;  // opposite end of the same up path
};

class DownSearch {
public:
    DownSearch(const Graph& g, const FragmentSides& sides, const UpSystem& up, DownMode mode,
               const PathSystemLimits& limits)
        : g_(g), sides_(sides), up_(up), mode_(mode), meter_(limits.budget) {
        avail_ = (sides.down | sides.separator) - up.vset;
        if ((sides.down | sides.separator).size() > limits.vertex_cap) {
            throw Error(ErrorCode::SearchCapExceeded, "down side exceeds the search cap");
        }
        term_.assign(static_cast<std::size_t>(g.order()), Terminal{});
        for (int i = 0; i < up.m(); ++i) {
            const PathSeq& p = up.paths[static_cast<std::size_t>(i)];
            term_[static_cast<std::size_t>(p.first())] = {i, p.last()};
            term_[static_cast<std::size_t>(p.last())] = {i, p.first()};
            terminals_.insert(p.first());
            terminals_.insert(p.last());
        }
    }

    std::optional<DownSystem> run() {
        const PathSeq& first = up_.paths.front();
        start_ = first.first();
        used_ = 1;
        current_.assign(1, first.last());
        step(first.last(), VertexSet{}, 0, 0);
        if (!found_) return std::nullopt;
        DownSystem out;
        out.paths = best_paths_;
        for (const PathSeq& p : out.paths) out.vset = out.vset | p.vertex_set();
        out.f = (out.vset & sides_.separator).size();
        out.mode = mode_;
        return out;
    }

private:
    using Score = std::pair<int, int>;

    Score score(int s_count, int v_count) const {
        if (mode_ == DownMode::MaxVertices) return {v_count, 0};
        return {s_count, v_count};
    }

    void close_path(int at) {
        current_.push_back(at);
        done_.push_back(PathSeq{current_});
        current_.pop_back();
    }

    // v_count / s_count: vertices of finished down paths.
    void step(int cur, VertexSet visited, int v_count, int s_count) {
        meter_.tick();
        const int cur_v = v_count + static_cast<int>(current_.size());
        const int cur_s = s_count + static_cast<int>(std::count_if(current_.begin(), current_.end(), [&](int v) {
                              return sides_.separator.contains(v);
                          }));
        const VertexSet open = avail_ - visited;
        const int pending = 2 * (up_.m() - std::popcount(used_)) + 1;
        if (found_) {
            const Score potential = score(cur_s + (open & sides_.separator).size() + pending,
                                          cur_v + open.size() + pending);
            if (potential <= best_score_) return;
        }
        const bool all_used = std::popcount(used_) == up_.m();
        for (int x : g_.neighbors(cur)) {
            if (open.contains(x)) {
                current_.push_back(x);
                VertexSet next = visited;
                next.insert(x);
                step(x, next, v_count, s_count);
                current_.pop_back();
                continue;
            }
            if (!terminals_.contains(x)) continue;
            const Terminal t = term_[static_cast<std::size_t>(x)];
            if (all_used) {
                if (x != start_) continue;
                const int total_v = cur_v + 1;
                const int cycle_size = up_.vset.size() + total_v - 2 * up_.m();
                if (cycle_size < 3) continue;
                const Score sc = score(cur_s + 1, total_v);
                if (!found_ || best_score_ < sc) {
                    close_path(x);
                    found_ = true;
                    best_score_ = sc;
                    best_paths_ = done_;
                    done_.pop_back();
                }
                continue;
            }
            if (used_ >> t.path & 1) continue;
            // Close the current down path at x, walk up path t.path, start anew.
            close_path(x);
            const std::vector<int> saved = current_;
            used_ |= std::uint64_t{1} << t.path;
            current_.assign(1, t.other);
            step(t.other, visited, cur_v + 1, cur_s + 1);
            used_ &= ~(std::uint64_t{1} << t.path);
            current_ = saved;
            done_.pop_back();
        }
    }

    const Graph& g_;
    const FragmentSides& sides_;
    const UpSystem& up_;
    DownMode mode_;
    BudgetMeter meter_;
    VertexSet avail_;
    VertexSet terminals_;
    std::vector<Terminal> term_;
    int start_ = -1;
    std::uint64_t used_ = 0;
    std::vector<int> current_;
    std::vector<PathSeq> done_;
    bool found_ = false;
    Score best_score_{-1, -1};
    std::vector<PathSeq> best_paths_;
};

class StarSearch {
public:
    StarSearch(const Graph& g, VertexSet allowed, VertexSet separator, int from, int to, const SearchBudget& budget)
        : g_(g), allowed_(allowed), separator_(separator), to_(to), meter_(budget) {
        path_.assign(1, from);
    }

    void run() { extend(path_.front(), VertexSet::single(path_.front())); }

    std::optional<PathSeq> best() const {
        if (best_.empty()) return std::nullopt;
        return PathSeq{best_};
    }

private:
    void extend(int v, VertexSet visited) {
        meter_.tick();
        if (v == to_) {
            if ((visited & separator_).size() >= 3 && path_.size() > best_.size()) best_ = path_;
            return;
        }
        const VertexSet open = allowed_ - visited;
        const VertexSet ahead = reachable(g_, v, open | VertexSet::single(v));
        if (!ahead.contains(to_)) return;
        if (path_.size() + static_cast<std::size_t>(ahead.size() - 1) <= best_.size()) return;
        if ((visited & separator_).size() + (ahead & (separator_ - VertexSet::single(v))).size() < 3) return;
        for (int w : g_.neighbors(v) & open) {
            path_.push_back(w);
            VertexSet next = visited;
            next.insert(w);
            extend(w, next);
            path_.pop_back();
        }
    }

    const Graph& g_;
    VertexSet allowed_;
    VertexSet separator_;
    int to_;
    BudgetMeter meter_;
    std::vector<int> path_;
    std::vector<int> best_;
};

CycleSeq splice(const UpSystem& up, const DownSystem& down) {
    // Down path i leaves the end of the i-th traversed up path and enters the
    // next; the traversal order is recovered from the down path endpoints.
    std::vector<int> seq = up.paths.front().vertices;
    for (std::size_t i = 0; i < down.paths.size(); ++i) {
        const std::vector<int>& d = down.paths[i].vertices;
        seq.insert(seq.end(), d.begin() + 1, d.end() - 1);
        if (i + 1 == down.paths.size()) break;
        const int entry = d.back();
        for (const PathSeq& p : up.paths) {
            if (p.first() == entry) {
                seq.insert(seq.end(), p.vertices.begin(), p.vertices.end());
                break;
            }
            if (p.last() == entry) {
                seq.insert(seq.end(), p.vertices.rbegin(), p.vertices.rend());
                break;
            }
        }
    }
    return CycleSeq{seq};
}

}  // namespace

DownMode select_down_mode(int delta, int kappa, int down_size) {
    return down_size >= 2 * (delta - kappa + 1) ? DownMode::MaxVertices : DownMode::MaxSeparatorThenVertices;
}

UpSystem max_up_system(const Graph& g, const FragmentSides& sides, const PathSystemLimits& limits) {
    std::optional<UpSystem> first;
    enumerate_optima(g, sides, limits, [&](const std::vector<PathSeq>& paths) {
        first = finish(paths, sides);
        return false;
    });
    return *first;
}

std::vector<UpSystem> all_max_up_systems(const Graph& g, const FragmentSides& sides, const PathSystemLimits& limits) {
    std::vector<UpSystem> out;
    enumerate_optima(g, sides, limits, [&](const std::vector<PathSeq>& paths) {
        if (out.size() >= limits.max_optima) {
            throw Error(ErrorCode::SearchCapExceeded,
                        "more than " + std::to_string(limits.max_optima) + " optimal up-systems");
        }
        out.push_back(finish(paths, sides));
        return true;
    });
    return out;
}

std::optional<DownSystem> complete_down_system(const Graph& g, const FragmentSides& sides, const UpSystem& up,
                                               DownMode mode, const PathSystemLimits& limits) {
    if (up.paths.empty()) throw Error(ErrorCode::InvalidParameter, "up-system has no paths");
    if (up.m() > 63) throw Error(ErrorCode::SearchCapExceeded, "too many up paths");
    DownSearch search(g, sides, up, mode, limits);
    return search.run();
}

std::optional<DownSystem> complete_down_system(const Graph& g, const FragmentSides& sides, const UpSystem& up,
                                               const PathSystemLimits& limits) {
    const DownMode mode = select_down_mode(min_degree(g), connectivity(g), sides.down.size());
    return complete_down_system(g, sides, up, mode, limits);
}

bool special_case_applies(const FragmentSides& sides, const UpSystem& up, const DownSystem& down) {
    return down.f == 2 && !sides.separator.is_subset_of(up.vset);
}

std::optional<PathSeq> special_down_path(const Graph& g, const FragmentSides& sides, const UpSystem& up,
                                         const DownSystem& down, const PathSystemLimits& limits) {
    if (!special_case_applies(sides, up, down) || up.m() != 1) {
        throw Error(ErrorCode::NotSpecialCase, "requires f = 2 and a separator vertex outside V↑");
    }
    const PathSeq& q = up.paths.front();
    const VertexSet allowed = ((sides.down | sides.separator) - up.vset) | VertexSet::single(q.first()) |
                              VertexSet::single(q.last());
    StarSearch search(g, allowed, sides.separator, q.last(), q.first(), limits.budget);
    search.run();
    return search.best();
}

std::optional<PathSeq> special_down_path(const Graph& g, const FragmentSides& sides, const UpSystem& up,
                                         const PathSystemLimits& limits) {
    const std::optional<DownSystem> down = complete_down_system(g, sides, up, limits);
    if (!down) throw Error(ErrorCode::NotSpecialCase, "up-system has no completion");
    return special_down_path(g, sides, up, *down, limits);
}

std::optional<CombinedCycle> combined_cycle(const Graph& g, const FragmentSides& sides,
                                            const PathSystemLimits& limits) {
    const std::vector<UpSystem> optima = all_max_up_systems(g, sides, limits);
    return combined_cycle(g, sides, optima, limits);
}

std::optional<CombinedCycle> combined_cycle(const Graph& g, const FragmentSides& sides,
                                            std::span<const UpSystem> optima, const PathSystemLimits& limits) {
    const DownMode mode = select_down_mode(min_degree(g), connectivity(g), sides.down.size());
    std::optional<CombinedCycle> best;
    for (const UpSystem& up : optima) {
        std::optional<DownSystem> down = complete_down_system(g, sides, up, mode, limits);
        if (!down) continue;
        CycleSeq cycle = splice(up, *down);
        if (best && cycle.length() <= best->cycle.length()) continue;
        if (special_case_applies(sides, up, *down)) down->star_path = special_down_path(g, sides, up, *down, limits);
        best = CombinedCycle{std::move(cycle), up, std::move(*down)};
    }
    return best;
}

}  // namespace cyclex
