#include "cyclex/lemma_checks.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "cyclex/error.hpp"
#include "cyclex/invariants.hpp"

namespace cyclex {

namespace {

constexpr std::array<std::string_view, 14> kClauseNames = {
    "L5", "L6", "L7", "D1", "D2", "D3", "E1", "E2", "E3", "F1", "F2", "F3", "LD", "LF",
};

struct Context {
    const Graph& g;
    int delta;
    int kappa;
    const PathSystemLimits& limits;
};

std::string counts(const char* name, int value) { return std::string(name) + "=" + std::to_string(value); }

class EdgeCycleSearch {
public:
    EdgeCycleSearch(const Graph& g, VertexSet within, const std::vector<Edge>& edges, const SearchBudget& budget)
        : g_(g), within_(within), edges_(edges), meter_(budget) {
        partner_.assign(static_cast<std::size_t>(g.order()), -1);
        for (auto [a, b] : edges) {
            partner_[static_cast<std::size_t>(a)] = b;
            partner_[static_cast<std::size_t>(b)] = a;
        }
    }

    bool run() {
        start_ = edges_.front().first;
        const int second = edges_.front().second;
        VertexSet visited = VertexSet::single(start_);
        visited.insert(second);
        return walk(second, visited, 1, 2);
    }

private:
    // `cur` was entered through a matching edge (or is free to continue).
    bool walk(int cur, VertexSet visited, int used, int length) {
        meter_.tick();
        const int total = static_cast<int>(edges_.size());
        for (int x : g_.neighbors(cur) & within_) {
            if (x == start_) {
                if (used == total && length >= 3) return true;
                continue;
            }
            if (visited.contains(x)) continue;
            VertexSet next = visited;
            next.insert(x);
            const int mate = partner_[static_cast<std::size_t>(x)];
            if (mate >= 0) {
                if (mate == start_ || next.contains(mate)) continue;
                next.insert(mate);
                if (walk(mate, next, used + 1, length + 2)) return true;
            } else if (walk(x, next, used, length + 1)) {
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    VertexSet within_;
    const std::vector<Edge>& edges_;
    BudgetMeter meter_;
    std::vector<int> partner_;
    int start_ = -1;
};

void matchings(const std::vector<Edge>& pool, std::size_t next, VertexSet covered, std::vector<Edge>& acc,
               std::vector<std::vector<Edge>>& out) {
    if (!acc.empty()) out.push_back(acc);
    for (std::size_t i = next; i < pool.size(); ++i) {
        auto [a, b] = pool[i];
        if (covered.contains(a) || covered.contains(b)) continue;
        acc.push_back(pool[i]);
        VertexSet c = covered;
        c.insert(a);
        c.insert(b);
        matchings(pool, i + 1, c, acc, out);
        acc.pop_back();
    }
}

void push(LemmaReport& report, LemmaClause clause, const FragmentSides& sides, bool holds, std::string detail) {
    report.results.push_back(ClauseResult{clause, sides, true, holds, std::move(detail)});
}

void check_up_clauses(const Context& c, const FragmentSides& sides, const std::vector<UpSystem>& optima,
                      LemmaReport& report) {
    const int up = sides.up.size();
    if (c.kappa >= 3 && up <= 3 * c.delta - c.kappa - 4) {
        bool holds = true;
        for (const UpSystem& q : optima) holds = holds && is_independent(c.g, sides.up - q.vset);
        push(report, LemmaClause::L5, sides, holds, counts("optima", static_cast<int>(optima.size())));
    }
    if (c.kappa >= 4 && up >= 3 * c.delta - c.kappa - 3) {
        bool holds = true;
        for (const UpSystem& q : optima) {
            holds = holds && (is_independent(c.g, sides.up - q.vset) || q.vset.size() >= 3 * c.delta - 5);
        }
        push(report, LemmaClause::L6, sides, holds, counts("optima", static_cast<int>(optima.size())));
    }
    if (c.kappa >= 2) {
        int qualifying = 0;
        int failures = 0;
        for (const UpSystem& q : optima) {
            const VertexSet rest = sides.up - q.vset;
            if (rest.empty() || !is_independent(c.g, rest)) continue;
            ++qualifying;
            if (q.vset.size() < 2 * c.delta + q.m() - 2) ++failures;
        }
        if (qualifying > 0) {
            push(report, LemmaClause::F1, sides, failures == 0,
                 counts("optima", qualifying) + " " + counts("failures", failures));
        }
    }
}

void check_down_clauses(const Context& c, const FragmentSides& sides, bool down_is_end, const CombinedCycle& cc,
                        LemmaReport& report) {
    const int down = sides.down.size();
    const VertexSet vdown = cc.down.vset;
    const int f = cc.down.f;
    const int m = cc.up.m();
    const bool special = special_case_applies(sides, cc.up, cc.down);
    const bool separator_covered = sides.separator.is_subset_of(cc.up.vset);
    const std::optional<PathSeq>& star = cc.down.star_path;
    const std::string info = counts("f", f) + " " + counts("m", m) + " " + counts("|V_down|", vdown.size());

    if (c.kappa >= 2 && down_is_end && down <= 2 * c.delta - 2 * c.kappa + 1) {
        bool holds = sides.down.is_subset_of(vdown);
        if (star) holds = holds && sides.down.is_subset_of(star->vertex_set());
        push(report, LemmaClause::L7, sides, holds, info);
    }

    const bool base = c.kappa >= 3 && c.delta >= 2 * c.kappa - 2 && down_is_end;
    const bool small = down <= 3 * c.delta - 3 * c.kappa + 1;
    if (base) {
        const LemmaClause by_f[2][3] = {{LemmaClause::D1, LemmaClause::D2, LemmaClause::D3},
                                        {LemmaClause::E1, LemmaClause::E2, LemmaClause::E3}};
        const auto& row = by_f[small ? 0 : 1];
        if (f >= 3) {
            const bool indep = is_independent(c.g, sides.down - vdown);
            push(report, row[0], sides, small ? indep : indep || vdown.size() >= 3 * c.delta - 3 * c.kappa + f, info);
        } else if (f == 2 && !separator_covered) {
            if (!star) {
                push(report, row[1], sides, false, info + " no Q*");
            } else {
                const bool indep = is_independent(c.g, sides.down - star->vertex_set());
                push(report, row[1], sides, small ? indep : indep || vdown.size() >= 3 * c.delta - 3 * c.kappa + 3,
                     info);
            }
        } else if (f == 2) {
            const bool big = vdown.size() >= 2 * c.delta - 2 * c.kappa + 3;
            push(report, row[2], sides, small ? (sides.down - vdown).empty() || big : big, info);
        }
    }

    if (c.kappa >= 2) {
        const VertexSet rest = sides.down - vdown;
        if (!rest.empty() && is_independent(c.g, rest)) {
            push(report, LemmaClause::F2, sides, vdown.size() >= 2 * c.delta - 2 * c.kappa + 2 * f - m, info);
        }
        if (special && star) {
            const VertexSet left = sides.down - star->vertex_set();
            if (!left.empty() && is_independent(c.g, left)) {
                push(report, LemmaClause::F3, sides, vdown.size() >= 2 * c.delta - 2 * c.kappa + 5, info);
            }
        }
    }

    if (c.kappa >= 3 && c.delta >= 2 * c.kappa - 2 && down <= 3 * c.delta - 3 * c.kappa) {
        push(report, LemmaClause::LF, sides, is_independent(c.g, sides.down - vdown), info);
    }
}

void check_lemma_d(const Context& c, const FragmentSides& sides, LemmaReport& report) {
    if (c.kappa < 2 || 2 * c.delta <= 3 * c.kappa - 2) return;
    std::vector<Edge> pool;
    for (int a : sides.separator) {
        for (int b : c.g.neighbors(a) & sides.separator) {
            if (a < b) pool.emplace_back(a, b);
        }
    }
    std::vector<std::vector<Edge>> all;
    std::vector<Edge> acc;
    matchings(pool, 0, {}, acc, all);
    if (all.empty()) return;
    int failures = 0;
    for (const std::vector<Edge>& l : all) {
        VertexSet within = sides.down;
        for (auto [a, b] : l) {
            within.insert(a);
            within.insert(b);
        }
        if (!has_cycle_through_edges(c.g, within, l, c.limits.budget)) ++failures;
    }
    push(report, LemmaClause::LD, sides, failures == 0,
         counts("matchings", static_cast<int>(all.size())) + " " + counts("failures", failures));
}

}  // namespace

std::string_view to_string(LemmaClause clause) { return kClauseNames[static_cast<std::size_t>(clause)]; }

std::optional<LemmaClause> parse_lemma_clause(std::string_view name) {
    for (std::size_t i = 0; i < kClauseNames.size(); ++i) {
        if (kClauseNames[i] == name) return static_cast<LemmaClause>(i);
    }
    return std::nullopt;
}

bool LemmaReport::all_hold() const {
    return std::all_of(results.begin(), results.end(), [](const ClauseResult& r) { return r.holds; });
}

bool LemmaReport::exercised(LemmaClause clause) const {
    return std::any_of(results.begin(), results.end(), [&](const ClauseResult& r) { return r.clause == clause; });
}

bool has_cycle_through_edges(const Graph& g, VertexSet within, const std::vector<Edge>& edges,
                             const SearchBudget& budget) {
    if (edges.empty()) return false;
    for (auto [a, b] : edges) {
        if (!within.contains(a) || !within.contains(b) || !g.adjacent(a, b)) {
            throw Error(ErrorCode::InvalidParameter, "edge outside the vertex set");
        }
    }
    EdgeCycleSearch search(g, within, edges, budget);
    return search.run();
}

LemmaReport check_lemmas(const Graph& g, const PathSystemLimits& limits) {
    LemmaReport report;
    if (g.order() < 3 || !is_connected(g) || is_complete(g)) return report;
    const Context c{g, min_degree(g), connectivity(g), limits};

    std::vector<Fragment> frags;
    try {
        frags = fragments_of(g);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SearchCapExceeded) throw;
        ++report.skipped;
        return report;
    }
    std::vector<VertexSet> ends;
    for (const Fragment& f : frags) {
        if (f.is_end) ends.push_back(f.x);
    }
    auto is_end = [&](VertexSet x) { return std::find(ends.begin(), ends.end(), x) != ends.end(); };

    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (const Fragment& f : frags) {
        for (const FragmentSides& sides : admissible_orientations(f)) {
            if (!seen.emplace(sides.up.bits(), sides.down.bits()).second) continue;
            try {
                const std::vector<UpSystem> optima = all_max_up_systems(g, sides, limits);
                check_up_clauses(c, sides, optima, report);
                const bool down_is_end = is_end(sides.down);
                if (down_is_end) check_lemma_d(c, sides, report);
                if (const std::optional<CombinedCycle> cc = combined_cycle(g, sides, optima, limits)) {
                    check_down_clauses(c, sides, down_is_end, *cc, report);
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SearchCapExceeded && e.code() != ErrorCode::BudgetExhausted) throw;
                ++report.skipped;
            }
        }
    }
    return report;
}

LemmaECheck check_lemma_e(const Graph& g, const SearchBudget& budget) {
    LemmaECheck out;
    const int n = g.order();
    if (n < 3 || !has_hamilton_cycle(g, budget)) return out;
    out.applicable = true;
    std::vector<int> degrees;
    for (int v = 0; v < n; ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.rbegin(), degrees.rend());
    for (int r = 1; r <= n; ++r) {
        if (degrees[static_cast<std::size_t>(r - 1)] >= r) out.r = r;
    }
    for (int u = 0; u < n && out.holds; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (longest_path_between(g, u, v, budget) < out.r) {
                out.holds = false;
                out.failing_pair = std::make_pair(u, v);
                break;
            }
        }
    }
    return out;
}

}  // namespace cyclex
