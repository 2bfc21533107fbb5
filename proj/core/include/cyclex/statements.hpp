#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclex/cycles.hpp"
#include "cyclex/fragments.hpp"
#include "cyclex/invariants.hpp"

namespace cyclex {

/// Statement registry.  Each id pairs a hypothesis over (n, δ, κ, α) with
/// one of four conclusions: hamiltonian; c >= min(n, X); c >= X or a
/// dominating cycle exists; a dominating cycle exists.
///
///   A   n >= 3, δ >= n/2                         hamiltonian
///   B   2-connected, δ >= (n+κ)/3                hamiltonian
///   C   2-connected, δ >= max((n+2)/3, α)        hamiltonian
///   D   3-connected, δ >= max((n+2κ)/4, α)       hamiltonian
///   E   3-connected, δ >= max((n+κ+3)/4, α)      hamiltonian
///   F   2-connected                              c >= min(n, 2δ)
///   G   3-connected                              c >= min(n, 3δ-κ)
///   H   3-connected, δ >= α                      c >= min(n, 3δ-3)
///   I   4-connected, δ >= α                      c >= min(n, 4δ-2κ)
///   J   2-connected, δ >= (n+2)/3                dominating cycle
///   K   3-connected, δ >= (n+2κ)/4               dominating cycle
///   L   3-connected, δ >= (n+κ+3)/4              dominating cycle
///   M   3-connected                              c >= 3δ-3 or dominating
///   Lemma4       3-connected, δ <= 2κ-3          c >= 4δ-2κ or dominating
///   Conjecture1  4-connected, δ >= α             c >= min(n, 4δ-κ-4)
///   Conjecture2  4-connected                     c >= 4δ-κ-4 or dominating
///   T1           4-connected                     c >= 4δ-2κ or dominating
///   T1-strict    4-connected                     c >= 4δ-2κ+1 or dominating
///   T2..T5       endfragment size regimes (see check_theorems_2_to_5)
///
/// Fractional thresholds are compared in integer arithmetic.  Vertices and
/// edges count as cycles of length 1 and 2, so degenerate dominating cycles
/// are accepted.
enum class StatementId {
    A, B, C, D, E, F, G, H, I, J, K, L, M,
    Lemma4, Conjecture1, Conjecture2, T1, T1Strict, T2, T3, T4, T5,
};

std::span<const StatementId> all_statements();
std::string_view to_string(StatementId id);
std::optional<StatementId> parse_statement(std::string_view name);
/// Conjectures are evaluated but never asserted.
bool is_conjecture(StatementId id);

enum class WitnessKind { None, LongCycle, Dominating, Hamilton };
std::string_view to_string(WitnessKind kind);

struct Verdict {
    StatementId id = StatementId::T1;
    bool applicable = false;
    bool holds = false;
    /// A search ran out of budget; holds is not meaningful.
    bool indeterminate = false;
    /// Conclusion evaluated (always for applicable graphs).
    bool evaluated = false;
    std::optional<CycleSeq> witness;
    WitnessKind witness_kind = WitnessKind::None;
    /// Required cycle length for length-type conclusions, 0 otherwise.
    int target = 0;
    InvariantRecord invariants;
    std::string detail;

    bool counterexample() const { return applicable && evaluated && !indeterminate && !holds; }
};

/// Lazily computed graph quantities shared by several statement checks.
/// Not thread-safe; use one profile per worker.
class GraphProfile {
public:
    explicit GraphProfile(Graph g, SearchBudget budget = {});

    const Graph& graph() const { return g_; }
    const SearchBudget& budget() const { return budget_; }
    const InvariantRecord& invariants();
    const CircumferenceResult& circumference();
    const std::optional<CycleSeq>& dominating_cycle();
    const std::optional<CycleSeq>& hamilton_cycle();
    /// A cycle of length >= target (degenerate lengths 1 and 2 allowed),
    /// using the circumference if already known.
    std::optional<CycleSeq> cycle_at_least(int target);
    const std::vector<Endfragment>& endfragments();

private:
    Graph g_;
    SearchBudget budget_;
    std::optional<InvariantRecord> invariants_;
    std::optional<CircumferenceResult> circumference_;
    std::optional<std::optional<CycleSeq>> dominating_;
    std::optional<std::optional<CycleSeq>> hamilton_;
    std::optional<std::vector<Endfragment>> endfragments_;
};

struct CheckOptions {
    SearchBudget budget;
    /// Evaluate the conclusion even when the hypothesis fails.
    bool evaluate_inapplicable = true;
};

Verdict check_statement(GraphProfile& profile, StatementId id, bool evaluate_inapplicable = true);
Verdict check_statement(const Graph& g, StatementId id, const CheckOptions& options = {});
Verdict check_theorem1(const Graph& g, const CheckOptions& options = {});

enum class Regime { T2, T3, T4, T5 };
std::string_view to_string(Regime regime);

/// (|A↑| <= 3δ-κ-4 ?, |A↓| <= 3δ-3κ+1 ?) -> T2 (yes, yes), T3 (yes, no),
/// T4 (no, yes), T5 (no, no).
Regime classify_regime(int delta, int kappa, int up_size, int down_size);

struct RegimeEntry {
    FragmentSides sides;
    Regime regime;
};

struct RegimeReport {
    /// Every endfragment that can serve as A↓ (smaller or tied side).
    std::vector<RegimeEntry> entries;
    /// Verdicts for T2, T3, T4, T5 in that order.
    std::vector<Verdict> verdicts;
    /// κ = 3 and no endfragment falls in the T2 regime: no theorem covers g.
    bool uncovered = false;
};

/// A theorem is applicable when some endfragment falls in its regime and the
/// connectivity requirement holds (κ >= 3 for T2, κ >= 4 for T3..T5).
RegimeReport check_theorems_2_to_5(GraphProfile& profile, bool evaluate_inapplicable = true);
RegimeReport check_theorems_2_to_5(const Graph& g, const CheckOptions& options = {});

/// Independent re-check of a verdict's witness: cycle validity, length
/// against the target, independence of the uncovered vertices, or coverage.
bool revalidate(const Graph& g, const Verdict& v);

struct LimitExample {
    std::string name;
    std::string graph6;
    InvariantRecord invariants;
    int circumference = 0;
    bool dominating = false;
    bool hamiltonian = false;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Builds 4K2+K3, 5K2+K4 and H(1,3,5,4) and checks each against its pinned
/// golden values and tightness claim.
std::vector<LimitExample> certify_limit_examples(const SearchBudget& budget = {});

struct HuntOptions {
    int workers = 1;
    SearchBudget budget;
    /// Graphs with more vertices are skipped.
    int max_n = kMaxVertices;
    /// Lines decoded per parallel batch.
    std::size_t batch = 4096;
};

struct DecodeFailure {
    std::size_t line = 0;
    std::string message;
};

struct Counterexample {
    std::size_t line = 0;
    std::string graph6;
    Verdict verdict;
};

struct HuntReport {
    StatementId id = StatementId::T1;
    std::uint64_t scanned = 0;  ///< decoded graphs
    std::uint64_t applicable = 0;
    std::uint64_t holds = 0;
    std::uint64_t indeterminate = 0;
    std::uint64_t skipped = 0;  ///< above max_n
    std::vector<DecodeFailure> decode_errors;
    std::vector<Counterexample> counterexamples;  ///< input order

    bool clean() const { return counterexamples.empty(); }
};

/// Streams newline-delimited graph6 (blank lines ignored, an optional
/// ">>graph6<<" header stripped) and reports every applicable graph on which
/// the statement fails.  Output is independent of the worker count.
HuntReport hunt_counterexamples(std::istream& in, StatementId id, const HuntOptions& options = {});

}  // namespace cyclex
