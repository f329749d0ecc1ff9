#ifndef CMCHORDAL_COMPLEX_HPP
#define CMCHORDAL_COMPLEX_HPP

#include <vector>

#include "cmchordal/graph.hpp"

namespace cmchordal {

// Facet-described simplicial complex on ambient vertex set 1..n. Facets are
// inclusion-maximal and mutually incomparable, kept in lexicographic order.
// The empty complex (only face: the empty set) is encoded as a single empty
// facet; a complex with no faces at all (the void complex) has an empty
// facet list and is rejected by the homology routines.
struct SimplicialComplex {
    int n = 0;
    std::vector<VertexSet> facets;

    bool is_void() const { return facets.empty(); }
    // -1 for the empty complex.
    int dim() const;

    bool operator==(const SimplicialComplex&) const = default;
};

// Builds a complex from arbitrary face generators: drops dominated sets,
// deduplicates, sorts.
SimplicialComplex make_complex(int n, std::vector<VertexSet> generators);

bool is_face(const SimplicialComplex& c, const VertexSet& f);

// All faces including the empty face, lexicographic.
std::vector<VertexSet> enumerate_faces(const SimplicialComplex& c);

// Number of faces without enumerating storage-heavy intermediates; includes
// the empty face.
long long face_count(const SimplicialComplex& c);

// link(c, f) = { g : g disjoint from f, g union f a face of c }.
SimplicialComplex link(const SimplicialComplex& c, const VertexSet& f);

struct FacePosetGraph {
    Graph graph;
    // faces[i] is the nonempty face represented by graph vertex i+1.
    std::vector<VertexSet> faces;
};

// Graph on the nonempty faces of c with edges between inclusion-incomparable
// pairs. The independence complex of the result is the order complex of the
// face poset of c (its faces are the chains).
FacePosetGraph incomparability_graph_of_face_poset(const SimplicialComplex& c);

} // namespace cmchordal

#endif
