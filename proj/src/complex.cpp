#include "cmchordal/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace cmchordal {

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

SimplicialComplex make_complex(int n, std::vector<VertexSet> generators) {
    if (n < 0 || n > kMaxVertices)
        throw precondition_error("complex: ambient vertex count out of range");
    std::vector<std::uint64_t> masks;
    masks.reserve(generators.size());
    std::uint64_t ambient = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (const auto& g : generators) {
        if (!is_valid_vertex_set(g, n))
            throw precondition_error("complex: generator is not a vertex set within 1..n");
        std::uint64_t m = to_mask(g);
        if ((m & ~ambient) != 0)
            throw precondition_error("complex: generator outside ambient vertex set");
        masks.push_back(m);
    }
    // keep only inclusion-maximal generators
    std::vector<std::uint64_t> maximal;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
            if (i == j)
                continue;
            if ((masks[i] & masks[j]) == masks[i] && masks[i] != masks[j])
                dominated = true;
            if (masks[i] == masks[j] && j < i)
                dominated = true; // duplicate, keep first
        }
        if (!dominated)
            maximal.push_back(masks[i]);
    }
    SimplicialComplex c;
    c.n = n;
    for (std::uint64_t m : maximal)
        c.facets.push_back(from_mask(m));
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

bool is_face(const SimplicialComplex& c, const VertexSet& f) {
    std::uint64_t fm = to_mask(f);
    for (const auto& F : c.facets)
        if ((fm & to_mask(F)) == fm)
            return true;
    return false;
}

namespace {

std::unordered_set<std::uint64_t> face_masks(const SimplicialComplex& c) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto& F : c.facets) {
        std::uint64_t fm = to_mask(F);
        // all submasks of fm, including 0
        std::uint64_t sub = fm;
        while (true) {
            seen.insert(sub);
            if (sub == 0)
                break;
            sub = (sub - 1) & fm;
        }
    }
    return seen;
}

} // namespace

std::vector<VertexSet> enumerate_faces(const SimplicialComplex& c) {
    auto seen = face_masks(c);
    std::vector<VertexSet> faces;
    faces.reserve(seen.size());
    for (std::uint64_t m : seen)
        faces.push_back(from_mask(m));
    std::sort(faces.begin(), faces.end());
    return faces;
}

long long face_count(const SimplicialComplex& c) {
    return static_cast<long long>(face_masks(c).size());
}

SimplicialComplex link(const SimplicialComplex& c, const VertexSet& f) {
    std::uint64_t fm = to_mask(f);
    std::vector<VertexSet> gens;
    for (const auto& F : c.facets) {
        std::uint64_t Fm = to_mask(F);
        if ((fm & Fm) == fm)
            gens.push_back(from_mask(Fm & ~fm));
    }
    if (gens.empty())
        throw precondition_error("link: argument is not a face of the complex");
    return make_complex(c.n, std::move(gens));
}

FacePosetGraph incomparability_graph_of_face_poset(const SimplicialComplex& c) {
    std::vector<VertexSet> faces = enumerate_faces(c);
    std::erase_if(faces, [](const VertexSet& f) { return f.empty(); });
    if (faces.empty())
        throw precondition_error("face poset: complex has no nonempty faces");
    if (faces.size() > static_cast<std::size_t>(kMaxVertices))
        throw cap_error("face poset: more than " + std::to_string(kMaxVertices) + " faces");

    int n = static_cast<int>(faces.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        std::uint64_t a = to_mask(faces[i]);
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t b = to_mask(faces[j]);
            bool comparable = (a & b) == a || (a & b) == b;
            if (!comparable)
                edges.emplace_back(i + 1, j + 1);
        }
    }
    return {Graph::from_edges(n, edges), std::move(faces)};
}

} // namespace cmchordal
