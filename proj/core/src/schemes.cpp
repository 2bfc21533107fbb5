#include "cyclex/schemes.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>

#include "cyclex/error.hpp"
#include "cyclex/parallel.hpp"

namespace cyclex {

namespace {

constexpr std::size_t kReviewLogLimit = 200;

struct ClauseName {
    BoundClause clause;
    std::string_view name;
};

constexpr std::array<ClauseName, 15> kClauseNames = {{
    {BoundClause::L1Base, "L1-base"}, {BoundClause::A1, "a1"}, {BoundClause::A2, "a2"},
    {BoundClause::A3, "a3"}, {BoundClause::A4, "a4"}, {BoundClause::A5, "a5"},
    {BoundClause::LemmaA, "LA"}, {BoundClause::B1, "b1"}, {BoundClause::B2, "b2"},
    {BoundClause::B3, "b3"}, {BoundClause::LemmaB, "LB"}, {BoundClause::C1, "c1"},
    {BoundClause::C2, "c2"}, {BoundClause::C3, "c3"}, {BoundClause::LemmaC, "LC"},
}};

int half_up(int value) { return (value + 1) / 2; }

std::vector<int> positions_on(const CycleSeq& cycle) {
    std::vector<int> pos(kMaxVertices, -1);
    for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
        const int v = cycle.vertices[i];
        if (v < 0 || v >= kMaxVertices) throw Error(ErrorCode::InvalidScheme, "cycle vertex out of range");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    return pos;
}

bool review_only(BoundClause clause, int r) {
    return (clause == BoundClause::LemmaB || clause == BoundClause::LemmaC) && (r == 2 || r == 3);
}

bool sdr_augment(std::span<const VertexSet> zsets, std::size_t set, VertexSet& tried,
                 std::array<int, kMaxVertices>& owner) {
    for (int v : zsets[set] - tried) {
        tried.insert(v);
        if (owner[static_cast<std::size_t>(v)] < 0 ||
            sdr_augment(zsets, static_cast<std::size_t>(owner[static_cast<std::size_t>(v)]), tried, owner)) {
            owner[static_cast<std::size_t>(v)] = static_cast<int>(set);
            return true;
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(BoundClause clause) {
    for (const auto& entry : kClauseNames) {
        if (entry.clause == clause) return entry.name;
    }
    return "?";
}

std::optional<BoundClause> parse_clause(std::string_view name) {
    for (const auto& entry : kClauseNames) {
        if (entry.name == name) return entry.clause;
    }
    return std::nullopt;
}

int clause_arity(BoundClause clause) {
    switch (clause) {
        case BoundClause::L1Base:
        case BoundClause::A1:
        case BoundClause::A2:
        case BoundClause::A3:
        case BoundClause::A4:
        case BoundClause::A5:
        case BoundClause::LemmaA: return 2;
        case BoundClause::B1:
        case BoundClause::B2:
        case BoundClause::B3:
        case BoundClause::LemmaB: return 3;
        case BoundClause::C1:
        case BoundClause::C2:
        case BoundClause::C3:
        case BoundClause::LemmaC: return 4;
    }
    return 0;
}

int segment_length(const CycleSeq& cycle, int x, int y) {
    const std::vector<int> pos = positions_on(cycle);
    const int length = cycle.length();
    return (pos[static_cast<std::size_t>(y)] - pos[static_cast<std::size_t>(x)] + length) % length;
}

bool validate_scheme(const Scheme& s) {
    if (s.zsets.size() < 2) throw Error(ErrorCode::InvalidScheme, "a scheme needs at least two sets");
    if (s.r < 2) throw Error(ErrorCode::InvalidScheme, "gap parameter r must be >= 2");
    const std::vector<int> pos = positions_on(s.cycle);
    const VertexSet on_cycle = s.cycle.vertex_set();
    for (VertexSet z : s.zsets) {
        if (!z.is_subset_of(on_cycle)) {
            throw Error(ErrorCode::InvalidScheme, "set " + z.to_string() + " leaves the cycle");
        }
    }
    const int length = s.cycle.length();
    auto arc = [&](int x, int y) {
        return (pos[static_cast<std::size_t>(y)] - pos[static_cast<std::size_t>(x)] + length) % length;
    };
    for (std::size_t i = 0; i < s.zsets.size(); ++i) {
        for (std::size_t j = 0; j < s.zsets.size(); ++j) {
            const int needed = i == j ? 2 : s.r;
            for (int x : s.zsets[i]) {
                for (int y : s.zsets[j]) {
                    if (x != y && arc(x, y) < needed) return false;
                }
            }
        }
    }
    return true;
}

bool is_nontrivial(std::span<const VertexSet> zsets) {
    std::array<int, kMaxVertices> owner;
    owner.fill(-1);
    for (std::size_t set = 0; set < zsets.size(); ++set) {
        VertexSet tried;
        if (!sdr_augment(zsets, set, tried, owner)) return false;
    }
    return true;
}

SchemeSizes sizes_of(std::span<const VertexSet> zsets) {
    SchemeSizes out;
    for (VertexSet z : zsets) out.z.push_back(z.size());
    if (zsets.size() >= 2) out.union12 = (zsets[0] | zsets[1]).size();
    return out;
}

bool clause_applies(BoundClause clause, const SchemeSizes& sizes, int r) {
    if (static_cast<int>(sizes.z.size()) != clause_arity(clause)) return false;
    const auto& z = sizes.z;
    const int sum = z[0] + z[1];
    switch (clause) {
        case BoundClause::L1Base: return true;
        case BoundClause::A1: return r == 4;
        case BoundClause::A2: return r >= 5;
        case BoundClause::A3: return z[1] == 1;
        case BoundClause::A4: return z[0] == 1 && z[1] == 1;
        case BoundClause::A5: return sum >= 4 && r >= 4;
        case BoundClause::LemmaA: return true;
        case BoundClause::B1: return r >= 4 && sum >= 6 && z[2] == 1;
        case BoundClause::B2: return z[1] == 1 && z[2] == 1;
        case BoundClause::B3: return z[0] == 1 && z[1] == 1 && z[2] == 1;
        case BoundClause::LemmaB: return z[2] == 1;
        case BoundClause::C1: return r >= 4 && sum >= 8 && z[2] == 1 && z[3] == 1;
        case BoundClause::C2: return z[1] == 1 && z[2] == 1 && z[3] == 1;
        case BoundClause::C3: return z[0] == 1 && z[1] == 1 && z[2] == 1 && z[3] == 1;
        case BoundClause::LemmaC: return z[2] == 1 && z[3] == 1;
    }
    return false;
}

int scheme_lower_bound(BoundClause clause, const SchemeSizes& sizes, int r) {
    if (!clause_applies(clause, sizes, r)) {
        throw Error(ErrorCode::GuardViolated, "guard of clause " + std::string(to_string(clause)) + " does not hold");
    }
    const auto& z = sizes.z;
    const int sum = z[0] + z[1];
    switch (clause) {
        case BoundClause::L1Base: return sum + sizes.union12;
        case BoundClause::A1: return 2 * sum;
        case BoundClause::A2: return 2 * sum + r - 3;
        case BoundClause::A3: return 2 * z[0] + 2 * r - 4;
        case BoundClause::A4: return 2 * r;
        case BoundClause::A5: return 2 * sum + 2 * r - 8;
        case BoundClause::LemmaA: return std::min(2 * sum + 2 * r - 6, half_up(r * sum));
        case BoundClause::B1: return 2 * sum + 3 * r - 12;
        case BoundClause::B2: return 2 * z[0] + 3 * r - 6;
        case BoundClause::B3: return 3 * r;
        case BoundClause::LemmaB: return std::min(2 * sum + 3 * r - 10, half_up(r * sum));
        case BoundClause::C1: return 2 * sum + 4 * r - 16;
        case BoundClause::C2: return 2 * z[0] + 4 * r - 8;
        case BoundClause::C3: return 4 * r;
        case BoundClause::LemmaC: return std::min(2 * sum + 4 * r - 14, half_up(r * sum));
    }
    return 0;
}

bool SchemeAudit::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ClauseCheck& c) { return c.passed || c.review_only; });
}

SchemeAudit audit_scheme_lemmas(const Scheme& s, int bound_shift) {
    if (!validate_scheme(s)) throw Error(ErrorCode::InvalidScheme, "scheme segment conditions fail");
    if (!is_nontrivial(s.zsets)) throw Error(ErrorCode::TrivialScheme, "family has no system of distinct representatives");
    const SchemeSizes sizes = sizes_of(s.zsets);
    SchemeAudit audit;
    for (BoundClause clause : kAllClauses) {
        if (!clause_applies(clause, sizes, s.r)) continue;
        ClauseCheck check;
        check.clause = clause;
        check.bound = scheme_lower_bound(clause, sizes, s.r) + bound_shift;
        check.cycle_length = s.cycle.length();
        check.passed = check.cycle_length >= check.bound;
        check.review_only = review_only(clause, s.r);
        audit.checks.push_back(check);
    }
    return audit;
}

namespace {

/// All non-empty subsets of the L-cycle of size <= k with no two members
/// cyclically adjacent.
std::vector<VertexSet> spread_subsets(int length, int k) {
    std::vector<VertexSet> out;
    auto grow = [&](auto&& self, int next, VertexSet chosen) -> void {
        if (!chosen.empty()) out.push_back(chosen);
        if (chosen.size() == k) return;
        for (int v = next; v < length; ++v) {
            if (!chosen.empty()) {
                if (v == chosen.first() + length - 1) continue;  // wraps next to the first member
                if (chosen.contains(v - 1)) continue;
            }
            VertexSet with = chosen;
            with.insert(v);
            self(self, v + 1, with);
        }
    };
    grow(grow, 0, {});
    return out;
}

struct LengthSweep {
    int length;
    const SweepOptions& options;
    SweepReport report;

    void audit(int r, std::vector<VertexSet> zsets) {
        Scheme scheme{CycleSeq{}, std::move(zsets), r};
        scheme.cycle.vertices.resize(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) scheme.cycle.vertices[static_cast<std::size_t>(i)] = i;
        if (!validate_scheme(scheme) || !is_nontrivial(scheme.zsets)) return;
        ++report.schemes_checked;
        for (const ClauseCheck& check : audit_scheme_lemmas(scheme, options.bound_shift).checks) {
            ++report.clause_checks;
            if (check.passed) continue;
            SweepFinding finding{length, r, scheme.zsets, check};
            if (check.review_only) {
                ++report.review_failures;
                if (report.review_log.size() < kReviewLogLimit) report.review_log.push_back(std::move(finding));
            } else {
                report.violations.push_back(std::move(finding));
            }
        }
    }

    void run() {
        const std::vector<VertexSet> sets = spread_subsets(length, options.max_set_size);
        for (int r = 2; 2 * r <= length; ++r) {
            // near[v]: vertices at cyclic distance 1..r-1 from v.
            std::vector<VertexSet> near(static_cast<std::size_t>(length));
            for (int v = 0; v < length; ++v) {
                for (int d = 1; d < r; ++d) {
                    near[static_cast<std::size_t>(v)].insert((v + d) % length);
                    near[static_cast<std::size_t>(v)].insert((v - d + length) % length);
                }
            }
            auto shadow = [&](VertexSet z) {
                VertexSet out;
                for (int v : z) out |= near[static_cast<std::size_t>(v)];
                return out;
            };
            auto compatible = [&](VertexSet a, VertexSet b) { return !shadow(a).intersects(b); };
            const VertexSet zero = VertexSet::single(0);

            for (VertexSet z1 : sets) {
                for (VertexSet z2 : sets) {
                    if (!compatible(z1, z2)) continue;
                    const VertexSet u12 = z1 | z2;
                    if (u12.contains(0)) audit(r, {z1, z2});
                    for (int c = 0; c < length; ++c) {
                        const VertexSet z3 = VertexSet::single(c);
                        if (!compatible(z1, z3) || !compatible(z2, z3)) continue;
                        if ((u12 | z3).contains(0)) audit(r, {z1, z2, z3});
                        for (int d = c; d < length; ++d) {
                            const VertexSet z4 = VertexSet::single(d);
                            if (!compatible(z1, z4) || !compatible(z2, z4) || !compatible(z3, z4)) continue;
                            if ((u12 | z3 | z4).intersects(zero)) audit(r, {z1, z2, z3, z4});
                        }
                    }
                }
            }
        }
    }
};

}  // namespace

SweepReport scheme_soundness_sweep(const SweepOptions& options) {
    std::vector<int> lengths;
    for (int length = std::max(options.min_length, 3); length <= options.max_length; ++length) lengths.push_back(length);
    std::vector<SweepReport> parts(lengths.size());
    parallel_for(lengths.size(), options.workers, [&](std::size_t i) {
        LengthSweep sweep{lengths[i], options, {}};
        sweep.run();
        parts[i] = std::move(sweep.report);
    });
    SweepReport total;
    for (SweepReport& part : parts) {
        total.schemes_checked += part.schemes_checked;
        total.clause_checks += part.clause_checks;
        total.review_failures += part.review_failures;
        for (auto& v : part.violations) total.violations.push_back(std::move(v));
        for (auto& v : part.review_log) {
            if (total.review_log.size() < kReviewLogLimit) total.review_log.push_back(std::move(v));
        }
    }
    return total;
}

}  // namespace cyclex
