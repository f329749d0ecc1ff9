#ifndef CMCHORDAL_REISNER_HPP
#define CMCHORDAL_REISNER_HPP

#include "cmchordal/graph.hpp"
#include "cmchordal/homology.hpp"

namespace cmchordal {

// Stanley-Reisner complex of the edge ideal: faces are the independent sets,
// facets the maximal independent sets.
SimplicialComplex independence_complex(const Graph& g);

// Reisner's criterion: c is Cohen-Macaulay over the field iff for every face
// f (including the empty face) the reduced homology of link(c, f) vanishes
// in all degrees below dim link(c, f).
//
// reisner_is_cm fans the per-face link computations out across OpenMP
// threads; reisner_is_cm_serial is the plain loop kept as the reference
// implementation. Both always return the same verdict.
bool reisner_is_cm(const SimplicialComplex& c, FieldSpec k);
bool reisner_is_cm_serial(const SimplicialComplex& c, FieldSpec k);

} // namespace cmchordal

#endif
