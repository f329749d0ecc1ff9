#ifndef CMCHORDAL_CHORDAL_HPP
#define CMCHORDAL_CHORDAL_HPP

#include <optional>
#include <vector>

#include "cmchordal/graph.hpp"

namespace cmchordal {

// order[i] = vertex eliminated at step i (1-based labels).
using EliminationOrder = std::vector<int>;

// Facets of the clique complex: the maximal cliques of a graph.
struct FacetList {
    int n = 0;
    std::vector<VertexSet> facets; // lexicographic, mutually incomparable
};

struct FreeVertexReport {
    // free_per_facet[i] lists the vertices contained in facets[i] and in no
    // other facet; aligned with the FacetList this was computed from.
    std::vector<VertexSet> free_per_facet;
    // The facets that admit at least one free vertex, in facet-list order.
    std::vector<VertexSet> free_facets;
    int m = 0; // = free_facets.size()
};

// Maximum cardinality search. Deterministic (lowest label wins ties); the
// returned order is a perfect elimination order whenever g is chordal.
EliminationOrder mcs_order(const Graph& g);

// True iff every vertex's later-ordered neighbors form a clique.
bool is_perfect_elimination(const Graph& g, const EliminationOrder& order);

bool is_chordal(const Graph& g);

// Complete list of maximal cliques. Chordal graphs go through a perfect
// elimination order (at most n cliques); everything else through pivoted
// branch-and-bound enumeration.
FacetList maximal_cliques(const Graph& g);

// Greedy leaf dismantling: repeatedly remove a leaf (lowest facet index
// first), then reverse. Returns an order F_1..F_r in which each F_i is a
// leaf of the complex spanned by F_1..F_i, or nullopt if the dismantling
// gets stuck. F is a leaf iff it is the only facet or some branch G != F
// satisfies (H ^ F) <= (G ^ F) for every other facet H.
std::optional<std::vector<VertexSet>> quasi_forest_leaf_order(const FacetList& f);

// A vertex is free for a facet iff that facet is the only one containing it
// (equivalently, its closed neighborhood equals the facet).
FreeVertexReport free_vertex_facets(const FacetList& f);

} // namespace cmchordal

#endif
