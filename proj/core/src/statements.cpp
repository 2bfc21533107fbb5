#include "cyclex/statements.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <utility>

#include "cyclex/constructions.hpp"
#include "cyclex/error.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/parallel.hpp"

namespace cyclex {

namespace {

enum class Conclusion { Hamiltonian, LongCycleCappedByN, LongOrDominating, Dominating, Regime };

struct Rule {
    StatementId id;
    std::string_view name;
    Conclusion conclusion;
    int min_kappa;
    bool (*hypothesis)(const InvariantRecord&);
    int (*target)(const InvariantRecord&);
};

bool always(const InvariantRecord&) { return true; }
int no_target(const InvariantRecord&) { return 0; }

// Same order as StatementId.
const std::array<Rule, 22> kRules = {{
    {StatementId::A, "A", Conclusion::Hamiltonian, 0,
     [](const InvariantRecord& r) { return r.n >= 3 && 2 * r.delta >= r.n; }, no_target},
    {StatementId::B, "B", Conclusion::Hamiltonian, 2,
     [](const InvariantRecord& r) { return 3 * r.delta >= r.n + r.kappa; }, no_target},
    {StatementId::C, "C", Conclusion::Hamiltonian, 2,
     [](const InvariantRecord& r) { return 3 * r.delta >= r.n + 2 && r.delta >= r.alpha; }, no_target},
    {StatementId::D, "D", Conclusion::Hamiltonian, 3,
     [](const InvariantRecord& r) { return 4 * r.delta >= r.n + 2 * r.kappa && r.delta >= r.alpha; }, no_target},
    {StatementId::E, "E", Conclusion::Hamiltonian, 3,
     [](const InvariantRecord& r) { return 4 * r.delta >= r.n + r.kappa + 3 && r.delta >= r.alpha; }, no_target},
    {StatementId::F, "F", Conclusion::LongCycleCappedByN, 2, always,
     [](const InvariantRecord& r) { return 2 * r.delta; }},
    {StatementId::G, "G", Conclusion::LongCycleCappedByN, 3, always,
     [](const InvariantRecord& r) { return 3 * r.delta - r.kappa; }},
    {StatementId::H, "H", Conclusion::LongCycleCappedByN, 3,
     [](const InvariantRecord& r) { return r.delta >= r.alpha; },
     [](const InvariantRecord& r) { return 3 * r.delta - 3; }},
    {StatementId::I, "I", Conclusion::LongCycleCappedByN, 4,
     [](const InvariantRecord& r) { return r.delta >= r.alpha; },
     [](const InvariantRecord& r) { return 4 * r.delta - 2 * r.kappa; }},
    {StatementId::J, "J", Conclusion::Dominating, 2,
     [](const InvariantRecord& r) { return 3 * r.delta >= r.n + 2; }, no_target},
    {StatementId::K, "K", Conclusion::Dominating, 3,
     [](const InvariantRecord& r) { return 4 * r.delta >= r.n + 2 * r.kappa; }, no_target},
    {StatementId::L, "L", Conclusion::Dominating, 3,
     [](const InvariantRecord& r) { return 4 * r.delta >= r.n + r.kappa + 3; }, no_target},
    {StatementId::M, "M", Conclusion::LongOrDominating, 3, always,
     [](const InvariantRecord& r) { return 3 * r.delta - 3; }},
    {StatementId::Lemma4, "Lemma4", Conclusion::LongOrDominating, 3,
     [](const InvariantRecord& r) { return r.delta <= 2 * r.kappa - 3; },
     [](const InvariantRecord& r) { return 4 * r.delta - 2 * r.kappa; }},
    {StatementId::Conjecture1, "Conjecture1", Conclusion::LongCycleCappedByN, 4,
     [](const InvariantRecord& r) { return r.delta >= r.alpha; },
     [](const InvariantRecord& r) { return 4 * r.delta - r.kappa - 4; }},
    {StatementId::Conjecture2, "Conjecture2", Conclusion::LongOrDominating, 4, always,
     [](const InvariantRecord& r) { return 4 * r.delta - r.kappa - 4; }},
    {StatementId::T1, "T1", Conclusion::LongOrDominating, 4, always,
     [](const InvariantRecord& r) { return 4 * r.delta - 2 * r.kappa; }},
    {StatementId::T1Strict, "T1-strict", Conclusion::LongOrDominating, 4, always,
     [](const InvariantRecord& r) { return 4 * r.delta - 2 * r.kappa + 1; }},
    {StatementId::T2, "T2", Conclusion::Regime, 3, always, no_target},
    {StatementId::T3, "T3", Conclusion::Regime, 4, always, no_target},
    {StatementId::T4, "T4", Conclusion::Regime, 4, always, no_target},
    {StatementId::T5, "T5", Conclusion::Regime, 4, always, no_target},
}};

constexpr std::array<StatementId, 22> kIds = {
    StatementId::A, StatementId::B, StatementId::C, StatementId::D, StatementId::E, StatementId::F,
    StatementId::G, StatementId::H, StatementId::I, StatementId::J, StatementId::K, StatementId::L,
    StatementId::M, StatementId::Lemma4, StatementId::Conjecture1, StatementId::Conjecture2,
    StatementId::T1, StatementId::T1Strict, StatementId::T2, StatementId::T3, StatementId::T4,
    StatementId::T5,
};

const Rule& rule_of(StatementId id) { return kRules[static_cast<std::size_t>(id)]; }

int shared_target(const InvariantRecord& r) { return 4 * r.delta - 2 * r.kappa; }

void conclude_long_or_dominating(GraphProfile& p, Verdict& v) {
    if (auto cycle = p.cycle_at_least(v.target)) {
        v.holds = true;
        v.witness = std::move(cycle);
        v.witness_kind = WitnessKind::LongCycle;
        return;
    }
    if (const auto& dom = p.dominating_cycle()) {
        v.holds = true;
        v.witness = dom;
        v.witness_kind = WitnessKind::Dominating;
        if (dom->degenerate()) v.detail = "degenerate dominating cycle";
    }
}

void evaluate(GraphProfile& p, const Rule& rule, Verdict& v) {
    const InvariantRecord& inv = v.invariants;
    v.evaluated = true;
    switch (rule.conclusion) {
        case Conclusion::Hamiltonian:
            if (const auto& ham = p.hamilton_cycle()) {
                v.holds = true;
                v.witness = ham;
                v.witness_kind = WitnessKind::Hamilton;
            }
            break;
        case Conclusion::LongCycleCappedByN:
            v.target = std::min(inv.n, rule.target(inv));
            if (auto cycle = p.cycle_at_least(v.target)) {
                v.holds = true;
                v.witness = std::move(cycle);
                v.witness_kind = WitnessKind::LongCycle;
            }
            break;
        case Conclusion::LongOrDominating:
            v.target = rule.target(inv);
            conclude_long_or_dominating(p, v);
            break;
        case Conclusion::Dominating:
            if (const auto& dom = p.dominating_cycle()) {
                v.holds = true;
                v.witness = dom;
                v.witness_kind = WitnessKind::Dominating;
            }
            break;
        case Conclusion::Regime:
            break;
    }
}

std::size_t regime_index(StatementId id) {
    return static_cast<std::size_t>(id) - static_cast<std::size_t>(StatementId::T2);
}

}  // namespace

std::span<const StatementId> all_statements() { return kIds; }

std::string_view to_string(StatementId id) { return rule_of(id).name; }

std::optional<StatementId> parse_statement(std::string_view name) {
    for (const Rule& r : kRules) {
        if (r.name == name) return r.id;
    }
    return std::nullopt;
}

bool is_conjecture(StatementId id) { return id == StatementId::Conjecture1 || id == StatementId::Conjecture2; }

std::string_view to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::None: return "none";
        case WitnessKind::LongCycle: return "long-cycle";
        case WitnessKind::Dominating: return "dominating";
        case WitnessKind::Hamilton: return "hamilton";
    }
    return "none";
}

std::string_view to_string(Regime regime) {
    static constexpr std::array<std::string_view, 4> names = {"T2", "T3", "T4", "T5"};
    return names[static_cast<std::size_t>(regime)];
}

GraphProfile::GraphProfile(Graph g, SearchBudget budget) : g_(std::move(g)), budget_(budget) {}

const InvariantRecord& GraphProfile::invariants() {
    if (!invariants_) invariants_ = compute_invariants(g_);
    return *invariants_;
}

const CircumferenceResult& GraphProfile::circumference() {
    if (!circumference_) circumference_ = cyclex::circumference(g_, budget_);
    return *circumference_;
}

const std::optional<CycleSeq>& GraphProfile::dominating_cycle() {
    if (!dominating_) dominating_ = find_dominating_cycle(g_, DominatingMode::AllowDegenerate, budget_);
    return *dominating_;
}

const std::optional<CycleSeq>& GraphProfile::hamilton_cycle() {
    if (!hamilton_) hamilton_ = cyclex::hamilton_cycle(g_, budget_);
    return *hamilton_;
}

std::optional<CycleSeq> GraphProfile::cycle_at_least(int target) {
    const int n = g_.order();
    if (n == 0 || target > n) return std::nullopt;
    if (target <= 1) return CycleSeq{{0}};
    if (target == 2) {
        const std::vector<Edge> edges = g_.edges();
        if (!edges.empty()) return CycleSeq{{edges.front().first, edges.front().second}};
        return std::nullopt;
    }
    if (circumference_) {
        if (circumference_->length >= target) return circumference_->witness;
        return std::nullopt;
    }
    CircumferenceResult found = longest_cycle_within(g_, g_.vertices(), target, budget_);
    if (found.length >= target) return found.witness;
    return std::nullopt;
}

const std::vector<Endfragment>& GraphProfile::endfragments() {
    if (!endfragments_) {
        if (g_.order() < 3 || !is_connected(g_) || is_complete(g_)) {
            endfragments_.emplace();
        } else {
            endfragments_ = endfragments_of(g_);
        }
    }
    return *endfragments_;
}

Regime classify_regime(int delta, int kappa, int up_size, int down_size) {
    const bool small_up = up_size <= 3 * delta - kappa - 4;
    const bool small_down = down_size <= 3 * delta - 3 * kappa + 1;
    if (small_up) return small_down ? Regime::T2 : Regime::T3;
    return small_down ? Regime::T4 : Regime::T5;
}

RegimeReport check_theorems_2_to_5(GraphProfile& profile, bool evaluate_inapplicable) {
    RegimeReport report;
    const InvariantRecord& inv = profile.invariants();
    std::array<int, 4> hits{};
    try {
        for (const Endfragment& e : profile.endfragments()) {
            if (e.fragment.x.size() > e.fragment.hat.size()) continue;
            const FragmentSides sides = with_down(e.fragment);
            const Regime regime = classify_regime(inv.delta, inv.kappa, sides.up.size(), sides.down.size());
            report.entries.push_back({sides, regime});
            ++hits[static_cast<std::size_t>(regime)];
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SearchCapExceeded) throw;
    }
    report.uncovered = inv.kappa == 3 && hits[0] == 0;

    // The four theorems share one conclusion; evaluate it at most once.
    std::optional<Verdict> shared;
    for (StatementId id : {StatementId::T2, StatementId::T3, StatementId::T4, StatementId::T5}) {
        const Rule& rule = rule_of(id);
        Verdict v;
        v.id = id;
        v.invariants = inv;
        v.target = shared_target(inv);
        v.applicable = inv.kappa >= rule.min_kappa && hits[regime_index(id)] > 0;
        v.detail = "endfragments in regime: " + std::to_string(hits[regime_index(id)]);
        if (v.applicable || evaluate_inapplicable) {
            if (!shared) {
                shared = v;
                try {
                    conclude_long_or_dominating(profile, *shared);
                    shared->evaluated = true;
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::BudgetExhausted) throw;
                    shared->indeterminate = true;
                }
            }
            v.evaluated = shared->evaluated;
            v.indeterminate = shared->indeterminate;
            v.holds = shared->holds;
            v.witness = shared->witness;
            v.witness_kind = shared->witness_kind;
        }
        if (report.uncovered) v.detail += "; uncovered";
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

RegimeReport check_theorems_2_to_5(const Graph& g, const CheckOptions& options) {
    GraphProfile profile(g, options.budget);
    return check_theorems_2_to_5(profile, options.evaluate_inapplicable);
}

Verdict check_statement(GraphProfile& profile, StatementId id, bool evaluate_inapplicable) {
    const Rule& rule = rule_of(id);
    Verdict v;
    v.id = id;
    if (profile.graph().order() == 0) {
        v.detail = "empty graph";
        return v;
    }
    v.invariants = profile.invariants();
    if (rule.conclusion == Conclusion::Regime) {
        return check_theorems_2_to_5(profile, evaluate_inapplicable).verdicts[regime_index(id)];
    }
    v.applicable = v.invariants.kappa >= rule.min_kappa && rule.hypothesis(v.invariants);
    if (!v.applicable && !evaluate_inapplicable) return v;
    try {
        evaluate(profile, rule, v);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExhausted) throw;
        v.indeterminate = true;
        v.holds = false;
        v.witness.reset();
        v.witness_kind = WitnessKind::None;
        v.detail = "node budget exhausted";
    }
    return v;
}

Verdict check_statement(const Graph& g, StatementId id, const CheckOptions& options) {
    GraphProfile profile(g, options.budget);
    return check_statement(profile, id, options.evaluate_inapplicable);
}

Verdict check_theorem1(const Graph& g, const CheckOptions& options) {
    return check_statement(g, StatementId::T1, options);
}

bool revalidate(const Graph& g, const Verdict& v) {
    if (!v.holds) return !v.witness.has_value();
    if (!v.witness || !is_cycle_of(g, *v.witness)) return false;
    switch (v.witness_kind) {
        case WitnessKind::LongCycle: return v.witness->length() >= v.target;
        case WitnessKind::Dominating: return is_dominating_cycle(g, *v.witness);
        case WitnessKind::Hamilton: return v.witness->length() == g.order() && g.order() >= 3;
        case WitnessKind::None: return false;
    }
    return false;
}

namespace {

LimitExample measure(std::string name, const Graph& g, const SearchBudget& budget) {
    LimitExample ex;
    ex.name = std::move(name);
    ex.graph6 = encode_graph6(g);
    ex.invariants = compute_invariants(g);
    ex.circumference = circumference(g, budget).length;
    ex.dominating = find_dominating_cycle(g, DominatingMode::AllowDegenerate, budget).has_value();
    ex.hamiltonian = has_hamilton_cycle(g, budget);
    return ex;
}

void expect(LimitExample& ex, bool ok, const std::string& what) {
    if (!ok) ex.failures.push_back(what);
}

void expect_record(LimitExample& ex, const InvariantRecord& want, int c) {
    const InvariantRecord& got = ex.invariants;
    expect(ex, got.n == want.n, "n = " + std::to_string(got.n) + ", expected " + std::to_string(want.n));
    expect(ex, got.delta == want.delta,
           "delta = " + std::to_string(got.delta) + ", expected " + std::to_string(want.delta));
    expect(ex, got.kappa == want.kappa,
           "kappa = " + std::to_string(got.kappa) + ", expected " + std::to_string(want.kappa));
    expect(ex, got.alpha == want.alpha,
           "alpha = " + std::to_string(got.alpha) + ", expected " + std::to_string(want.alpha));
    expect(ex, ex.circumference == c, "c = " + std::to_string(ex.circumference) + ", expected " + std::to_string(c));
}

}  // namespace

std::vector<LimitExample> certify_limit_examples(const SearchBudget& budget) {
    std::vector<LimitExample> out;

    const Graph k2 = complete_graph(2);
    {
        LimitExample ex = measure("4K2+K3", join(disjoint_copies(4, k2), complete_graph(3)), budget);
        expect_record(ex, {11, 4, 3, 4, 0}, 9);
        expect(ex, !ex.dominating, "has a dominating cycle");
        const int bound = 4 * ex.invariants.delta - 2 * ex.invariants.kappa;
        expect(ex, ex.circumference < bound, "c reaches 4δ-2κ");
        out.push_back(std::move(ex));
    }
    {
        LimitExample ex = measure("5K2+K4", join(disjoint_copies(5, k2), complete_graph(4)), budget);
        expect_record(ex, {14, 5, 4, 5, 0}, 12);
        const int bound = 4 * ex.invariants.delta - 2 * ex.invariants.kappa;
        expect(ex, ex.circumference == bound, "c differs from 4δ-2κ");
        expect(ex, !ex.dominating, "has a dominating cycle");
        out.push_back(std::move(ex));
    }
    {
        LimitExample ex = measure("H(1,3,5,4)", construct_H(1, 3, 5, 4), budget);
        expect_record(ex, {13, 5, 4, 6, 0}, 12);
        expect(ex, ex.dominating, "no dominating cycle");
        expect(ex, !ex.hamiltonian, "hamiltonian");
        out.push_back(std::move(ex));
    }
    return out;
}

namespace {

struct LineOutcome {
    enum Kind { Blank, Decoded, Failed, Skipped } kind = Blank;
    std::string text;
    std::string error;
    Verdict verdict;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (s.starts_with(header)) s.remove_prefix(header.size());
    return s;
}

}  // namespace

HuntReport hunt_counterexamples(std::istream& in, StatementId id, const HuntOptions& options) {
    HuntReport report;
    report.id = id;
    std::size_t line_no = 0;
    std::vector<std::string> lines;
    std::vector<LineOutcome> outcomes;
    std::string line;
    bool more = true;
    while (more) {
        lines.clear();
        while (lines.size() < std::max<std::size_t>(options.batch, 1) && (more = static_cast<bool>(std::getline(in, line)))) {
            lines.push_back(line);
        }
        if (lines.empty()) break;
        outcomes.assign(lines.size(), LineOutcome{});
        parallel_for(lines.size(), options.workers, [&](std::size_t i) {
            LineOutcome& o = outcomes[i];
            const std::string_view text = trim(lines[i]);
            if (text.empty()) return;
            o.text = std::string(text);
            Graph g;
            try {
                g = decode_graph6(text);
            } catch (const Error& e) {
                o.kind = LineOutcome::Failed;
                o.error = e.what();
                return;
            }
            if (g.order() > options.max_n) {
                o.kind = LineOutcome::Skipped;
                return;
            }
            o.kind = LineOutcome::Decoded;
            GraphProfile profile(std::move(g), options.budget);
            o.verdict = check_statement(profile, id, false);
        });
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            const LineOutcome& o = outcomes[i];
            const std::size_t number = line_no + i + 1;
            switch (o.kind) {
                case LineOutcome::Blank: break;
                case LineOutcome::Failed: report.decode_errors.push_back({number, o.error}); break;
                case LineOutcome::Skipped: ++report.skipped; break;
                case LineOutcome::Decoded:
                    ++report.scanned;
                    if (!o.verdict.applicable) break;
                    ++report.applicable;
                    if (o.verdict.indeterminate) {
                        ++report.indeterminate;
                    } else if (o.verdict.holds) {
                        ++report.holds;
                    } else {
                        report.counterexamples.push_back({number, o.text, o.verdict});
                    }
                    break;
            }
        }
        line_no += lines.size();
    }
    return report;
}

}  // namespace cyclex
