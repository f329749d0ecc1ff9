#include "cmchordal/reisner.hpp"

#include <atomic>
#include <stdexcept>

#include "cmchordal/covers.hpp"

namespace cmchordal {

SimplicialComplex independence_complex(const Graph& g) {
    if (g.vertex_count() < 1)
        throw precondition_error("independence_complex: empty graph");
    SimplicialComplex c;
    c.n = g.vertex_count();
    c.facets = maximal_independent_sets(g);
    return c;
}

namespace {

// Links of faces of codimension <= 1 pass automatically: a link of
// dimension -1 has nothing below it, and a nonempty 0-dimensional link has
// betti(-1) = 0. Only links of dimension >= 1 need homology.
bool link_passes(const SimplicialComplex& c, const VertexSet& f, FieldSpec k) {
    SimplicialComplex l = link(c, f);
    if (l.dim() <= 0)
        return true;
    return reduced_betti(l, k).vanishes_below_dim();
}

void check_purity(const SimplicialComplex& c) {
    for (const auto& f : c.facets)
        if (f.size() != c.facets.front().size())
            throw std::logic_error("reisner: Cohen-Macaulay verdict on a non-pure complex");
}

} // namespace

bool reisner_is_cm_serial(const SimplicialComplex& c, FieldSpec k) {
    if (c.is_void())
        throw precondition_error("reisner_is_cm: void complex");
    for (const auto& f : enumerate_faces(c))
        if (!link_passes(c, f, k))
            return false;
    check_purity(c);
    return true;
}

bool reisner_is_cm(const SimplicialComplex& c, FieldSpec k) {
    if (c.is_void())
        throw precondition_error("reisner_is_cm: void complex");
    std::vector<VertexSet> faces = enumerate_faces(c);
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(faces.size()); ++i) {
        if (!ok.load(std::memory_order_relaxed))
            continue;
        if (!link_passes(c, faces[static_cast<std::size_t>(i)], k))
            ok.store(false, std::memory_order_relaxed);
    }
    if (ok.load())
        check_purity(c);
    return ok.load();
}

} // namespace cmchordal
