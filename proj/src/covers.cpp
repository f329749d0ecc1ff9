#include "cmchordal/covers.hpp"

#include <algorithm>

#include "cmchordal/chordal.hpp"

namespace cmchordal {

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return maximal_cliques(g.complement()).facets;
}

CoverList minimal_vertex_covers(const Graph& g) {
    std::uint64_t all = g.vertex_mask();
    CoverList cl;
    for (const auto& s : maximal_independent_sets(g))
        cl.covers.push_back(from_mask(all & ~to_mask(s)));
    std::sort(cl.covers.begin(), cl.covers.end());
    for (const auto& c : cl.covers)
        cl.cardinalities.push_back(static_cast<int>(c.size()));
    std::sort(cl.cardinalities.begin(), cl.cardinalities.end());
    return cl;
}

bool is_unmixed(const Graph& g) {
    CoverList cl = minimal_vertex_covers(g);
    if (cl.cardinalities.empty())
        return true;
    return cl.cardinalities.front() == cl.cardinalities.back();
}

} // namespace cmchordal
