#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cyclex/cycles.hpp"
#include "cyclex/fragments.hpp"
#include "cyclex/search_budget.hpp"

namespace cyclex {

struct PathSystemLimits {
    /// Largest |A↑ ∪ S| (resp. |A↓ ∪ S|) the exhaustive searches accept.
    int vertex_cap = 14;
    /// Largest number of distinct optimal up-systems enumerated.
    std::size_t max_optima = 20000;
    SearchBudget budget;
};

/// Vertex-disjoint paths in ⟨A↑ ∪ S⟩, each with >= 2 vertices and both
/// ends in S, covering as many vertices as possible.
struct UpSystem {
    std::vector<PathSeq> paths;
    VertexSet vset;  ///< V↑
    /// No path meets A↑: the optimum consists of edges inside S only.
    bool degenerate = false;

    int m() const { return static_cast<int>(paths.size()); }
};

enum class DownMode {
    MaxVertices,            ///< maximise |V↓|; used when |A↓| >= 2(δ-κ+1)
    MaxSeparatorThenVertices,  ///< maximise |V↓ ∩ S|, then |V↓|; used when |A↓| <= 2δ-2κ+1
};

/// Paths in ⟨A↓ ∪ S⟩ that close the up paths into one simple cycle.
struct DownSystem {
    std::vector<PathSeq> paths;
    VertexSet vset;  ///< V↓, terminals included
    int f = 0;       ///< |V↓ ∩ S|
    DownMode mode = DownMode::MaxVertices;
    /// Longest closing path with >= 3 separator vertices, present only in the
    /// special case f = 2 and S ⊄ V↑ when such a path exists.
    std::optional<PathSeq> star_path;
};

struct CombinedCycle {
    CycleSeq cycle;
    UpSystem up;
    DownSystem down;
};

/// The two thresholds are integer-complementary, so exactly one mode applies.
DownMode select_down_mode(int delta, int kappa, int down_size);

/// One optimal up-system (the first in enumeration order).
/// Errors: SearchCapExceeded when |A↑ ∪ S| > vertex_cap, NoValidSystem when no
/// S-S path with >= 2 vertices exists.
UpSystem max_up_system(const Graph& g, const FragmentSides& sides, const PathSystemLimits& limits = {});

/// Every optimal up-system, distinct as sets of (vertex set, end pair) per path.
/// One representative vertex order is returned for each path.
std::vector<UpSystem> all_max_up_systems(const Graph& g, const FragmentSides& sides,
                                         const PathSystemLimits& limits = {});

/// Optimal completion under `mode`, or nullopt when the up terminals cannot
/// be closed into one cycle through ⟨A↓ ∪ S⟩.
std::optional<DownSystem> complete_down_system(const Graph& g, const FragmentSides& sides, const UpSystem& up,
                                               DownMode mode, const PathSystemLimits& limits = {});
/// Same, with the mode chosen from δ, κ and |A↓|.
std::optional<DownSystem> complete_down_system(const Graph& g, const FragmentSides& sides, const UpSystem& up,
                                               const PathSystemLimits& limits = {});

/// f = 2 and S ⊄ V↑.
bool special_case_applies(const FragmentSides& sides, const UpSystem& up, const DownSystem& down);

/// Longest path in ⟨A↓ ∪ S⟩ closing Q↑_1 into a simple cycle and meeting S in
/// at least 3 vertices.  Errors: NotSpecialCase outside the special case.
std::optional<PathSeq> special_down_path(const Graph& g, const FragmentSides& sides, const UpSystem& up,
                                         const DownSystem& down, const PathSystemLimits& limits = {});
/// Computes the down system itself first.
std::optional<PathSeq> special_down_path(const Graph& g, const FragmentSides& sides, const UpSystem& up,
                                         const PathSystemLimits& limits = {});

/// Over every optimal up-system, the completion giving the longest cycle.
std::optional<CombinedCycle> combined_cycle(const Graph& g, const FragmentSides& sides,
                                            const PathSystemLimits& limits = {});
/// Same, reusing optima already produced by all_max_up_systems.
std::optional<CombinedCycle> combined_cycle(const Graph& g, const FragmentSides& sides,
                                            std::span<const UpSystem> optima, const PathSystemLimits& limits = {});

}  // namespace cyclex
