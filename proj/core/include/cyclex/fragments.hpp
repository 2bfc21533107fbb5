#pragma once

#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// A vertex set X whose neighbourhood N(X) is a minimum cut-set and whose
/// co-fragment X̂ = V - (X ∪ N(X)) is nonempty.
struct Fragment {
    VertexSet x;
    VertexSet separator;
    VertexSet hat;
    bool is_end = false;

    friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// The two sides of a fragment under the size convention |up| >= |down|.
struct FragmentSides {
    VertexSet up;         ///< A↑
    VertexSet down;       ///< A↓
    VertexSet separator;  ///< S = N(A↑) = N(A↓)

    friend bool operator==(const FragmentSides&, const FragmentSides&) = default;
};

/// Every fragment, sorted by lex_less on X.  Each minimum cut-set S
/// contributes the nonempty proper unions of components of G - S that have
/// N(X) = S exactly.
/// Errors: EmptyGraph, Disconnected, CompleteGraph.
std::vector<Fragment> fragments_of(const Graph& g);

struct Endfragment {
    Fragment fragment;
    FragmentSides sides;
    /// True when the endfragment itself is the A↑ side.
    bool fragment_is_up = false;
};

/// Inclusion-minimal fragments (minimal among all fragments of g), each
/// with its A↑/A↓ designation.
std::vector<Endfragment> endfragments_of(const Graph& g);

/// Size convention: the larger side is A↑; on a tie A↑ is the side with the
/// lex-smaller vertex set.
FragmentSides orient(const Fragment& f);

/// Explicitly use f.x as A↓ and f.hat as A↑, ignoring sizes.
inline FragmentSides with_down(const Fragment& f) { return {f.hat, f.x, f.separator}; }

/// Both namings admissible under |A↑| >= |A↓|: one entry, or two on a tie.
std::vector<FragmentSides> admissible_orientations(const Fragment& f);

}  // namespace cyclex
