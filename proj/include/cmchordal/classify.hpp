#ifndef CMCHORDAL_CLASSIFY_HPP
#define CMCHORDAL_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmchordal/chordal.hpp"
#include "cmchordal/covers.hpp"

namespace cmchordal {

// Full combinatorial verdict for one graph. For non-chordal inputs the
// classification fields (cm, type, gorenstein, ...) stay empty: the
// equivalence between unmixedness and Cohen-Macaulayness needs chordality,
// so no CM verdict is offered. unmixed is reported either way so the two
// sides of the equivalence stay externally checkable.
struct ClassificationReport {
    bool chordal = false;
    FacetList facets;
    FreeVertexReport free_report;
    int m = 0; // number of facets with a free vertex
    bool unmixed = false;
    int cover_size_min = 0;
    int cover_size_max = 0;
    std::optional<bool> cm;
    std::optional<std::vector<VertexSet>> partition; // the free-vertex facets, when they tile 1..n
    std::optional<long> cm_type;
    std::optional<bool> gorenstein;
    std::optional<VertexSet> chosen_free_vertices; // smallest free vertex per facet
};

// The free-vertex facets F_1..F_m when they are pairwise disjoint with
// union 1..n; nullopt otherwise. Requires a chordal graph without isolated
// vertices.
std::optional<std::vector<VertexSet>> cm_partition(const Graph& g);

// Requires no isolated vertices (and a nonempty graph).
ClassificationReport classify(const Graph& g);

// Cohen-Macaulay type: with the smallest-label free vertex chosen in each
// free-vertex facet, the number of maximal independent sets of the induced
// subgraph on the remaining vertices. Requires classify(g).cm.
long cm_type(const Graph& g);

// Same, but with an explicit choice of one free vertex per free-vertex
// facet (chosen[j] must be free for the j-th such facet). The result does
// not depend on the choice; the property tests exercise exactly that.
long cm_type_with_choice(const Graph& g, const VertexSet& chosen);

// True iff every connected component is a single edge. Requires a chordal
// graph without isolated vertices. Equals (cm and cm_type == 1).
bool is_gorenstein(const Graph& g);

// The zero-dimensional quotient the type computation factors through:
// variables = all vertices except the chosen free vertices, relations =
// pairwise products within each trimmed facet (squares included) plus the
// edges lying inside no free-vertex facet.
struct SocleComputation {
    VertexSet variables;
    std::vector<std::pair<int, int>> generators; // monomial x_a x_b as (a, b), a <= b
    long basis_count = 0; // squarefree monomials outside the ideal
    long socle_count = 0; // basis monomials killed by every variable
};

SocleComputation socle_computation(const Graph& g);

// Independent check of the type: counts socle monomials of the quotient by
// direct divisibility tests against the ideal generators, never through
// maximal-independent-set counting. Requires classify(g).cm.
long socle_type_oracle(const Graph& g);

// Serialization consumed by the CLI. Stable keys: chordal, cm, unmixed, m,
// partition, type, gorenstein, free_vertices, cover_size_min,
// cover_size_max. Keys for absent optional fields are omitted.
std::string report_to_json(const ClassificationReport& r);
std::string report_to_text(const ClassificationReport& r);

} // namespace cmchordal

#endif
