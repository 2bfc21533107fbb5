#include "cyclex/fragments.hpp"

#include <algorithm>

#include "cyclex/error.hpp"
#include "cyclex/invariants.hpp"

namespace cyclex {

namespace {

constexpr int kMaxComponents = 24;

}  // namespace

std::vector<Fragment> fragments_of(const Graph& g) {
    const std::vector<VertexSet> cutsets = minimum_cutsets(g);
    std::vector<Fragment> out;
    for (VertexSet s : cutsets) {
        const std::vector<VertexSet> parts = components(g, g.vertices() - s);
        const int k = static_cast<int>(parts.size());
        if (k > kMaxComponents) {
            throw Error(ErrorCode::SearchCapExceeded,
                        "cut-set " + s.to_string() + " leaves " + std::to_string(k) + " components");
        }
        const std::uint32_t full = (std::uint32_t{1} << k) - 1;
        for (std::uint32_t pick = 1; pick < full; ++pick) {
            VertexSet x;
            for (int i = 0; i < k; ++i) {
                if ((pick >> i) & 1U) x |= parts[static_cast<std::size_t>(i)];
            }
            const Neighborhood nb = neighborhood_and_hat(g, x);
            if (nb.boundary != s || nb.hat.empty()) continue;
            out.push_back({x, s, nb.hat, false});
        }
    }
    std::sort(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) { return lex_less(a.x, b.x); });
    out.erase(std::unique(out.begin(), out.end(), [](const Fragment& a, const Fragment& b) { return a.x == b.x; }),
              out.end());

    for (Fragment& f : out) {
        f.is_end = std::none_of(out.begin(), out.end(), [&](const Fragment& other) {
            return other.x != f.x && other.x.is_subset_of(f.x);
        });
    }
    return out;
}

FragmentSides orient(const Fragment& f) {
    const bool x_is_up = f.x.size() > f.hat.size() || (f.x.size() == f.hat.size() && lex_less(f.x, f.hat));
    return x_is_up ? FragmentSides{f.x, f.hat, f.separator} : FragmentSides{f.hat, f.x, f.separator};
}

std::vector<FragmentSides> admissible_orientations(const Fragment& f) {
    if (f.x.size() == f.hat.size()) {
        return {FragmentSides{f.x, f.hat, f.separator}, FragmentSides{f.hat, f.x, f.separator}};
    }
    return {orient(f)};
}

std::vector<Endfragment> endfragments_of(const Graph& g) {
    std::vector<Endfragment> out;
    for (const Fragment& f : fragments_of(g)) {
        if (!f.is_end) continue;
        const FragmentSides sides = orient(f);
        out.push_back({f, sides, sides.up == f.x});
    }
    return out;
}

}  // namespace cyclex
