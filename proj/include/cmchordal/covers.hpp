#ifndef CMCHORDAL_COVERS_HPP
#define CMCHORDAL_COVERS_HPP

#include <vector>

#include "cmchordal/graph.hpp"

namespace cmchordal {

struct CoverList {
    std::vector<VertexSet> covers;  // minimal vertex covers, lexicographic
    std::vector<int> cardinalities; // sorted multiset of cover sizes
};

// Complete list of inclusion-maximal independent sets, lexicographic.
// Computed as the maximal cliques of the complement graph.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// Exactly the complements of the maximal independent sets.
CoverList minimal_vertex_covers(const Graph& g);

// True iff all minimal vertex covers share one cardinality.
bool is_unmixed(const Graph& g);

} // namespace cmchordal

#endif
