#include "cmchordal/classify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace cmchordal {

namespace {

void require_classifiable(const Graph& g) {
    if (g.vertex_count() < 1)
        throw precondition_error("classification requires a nonempty graph");
    if (g.has_isolated_vertex())
        throw precondition_error("classification requires a graph without isolated vertices");
}

std::optional<std::vector<VertexSet>> partition_from(const FreeVertexReport& fv, int n) {
    std::uint64_t seen = 0;
    for (const auto& F : fv.free_facets) {
        std::uint64_t fm = to_mask(F);
        if (seen & fm)
            return std::nullopt; // facets overlap
        seen |= fm;
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (seen != all)
        return std::nullopt;
    return fv.free_facets;
}

// smallest-label free vertex of each free-vertex facet
VertexSet canonical_free_choice(const FreeVertexReport& fv) {
    VertexSet chosen;
    for (std::size_t i = 0; i < fv.free_per_facet.size(); ++i)
        if (!fv.free_per_facet[i].empty())
            chosen.push_back(fv.free_per_facet[i].front());
    return chosen;
}

long count_maximal_independent_sets_without(const Graph& g, const VertexSet& removed) {
    std::uint64_t keep = g.vertex_mask() & ~to_mask(removed);
    long count = static_cast<long>(maximal_independent_sets(induced_subgraph(g, from_mask(keep)).graph).size());
    return count;
}

} // namespace

std::optional<std::vector<VertexSet>> cm_partition(const Graph& g) {
    require_classifiable(g);
    if (!is_chordal(g))
        throw precondition_error("cm_partition requires a chordal graph");
    FreeVertexReport fv = free_vertex_facets(maximal_cliques(g));
    return partition_from(fv, g.vertex_count());
}

ClassificationReport classify(const Graph& g) {
    require_classifiable(g);

    ClassificationReport r;
    r.chordal = is_chordal(g);
    r.facets = maximal_cliques(g);
    r.free_report = free_vertex_facets(r.facets);
    r.m = r.free_report.m;

    CoverList covers = minimal_vertex_covers(g);
    r.cover_size_min = covers.cardinalities.front();
    r.cover_size_max = covers.cardinalities.back();
    r.unmixed = r.cover_size_min == r.cover_size_max;

    if (!r.chordal)
        return r;

    r.partition = partition_from(r.free_report, g.vertex_count());
    r.cm = r.partition.has_value();
    if (*r.cm) {
        r.chosen_free_vertices = canonical_free_choice(r.free_report);
        r.cm_type = count_maximal_independent_sets_without(g, *r.chosen_free_vertices);
        r.gorenstein = (*r.cm_type == 1);
    }
    return r;
}

long cm_type(const Graph& g) {
    ClassificationReport r = classify(g);
    if (!r.chordal)
        throw precondition_error("cm_type requires a chordal graph");
    if (!r.cm.value_or(false))
        throw precondition_error("cm_type requires a Cohen-Macaulay graph");
    return *r.cm_type;
}

long cm_type_with_choice(const Graph& g, const VertexSet& chosen) {
    require_classifiable(g);
    if (!is_chordal(g))
        throw precondition_error("cm_type requires a chordal graph");
    FreeVertexReport fv = free_vertex_facets(maximal_cliques(g));
    if (!partition_from(fv, g.vertex_count()))
        throw precondition_error("cm_type requires a Cohen-Macaulay graph");
    if (chosen.size() != fv.free_facets.size())
        throw precondition_error("cm_type: need exactly one free vertex per free-vertex facet");
    std::size_t j = 0;
    for (std::size_t i = 0; i < fv.free_per_facet.size(); ++i) {
        if (fv.free_per_facet[i].empty())
            continue;
        const VertexSet& free = fv.free_per_facet[i];
        if (!std::binary_search(free.begin(), free.end(), chosen[j]))
            throw precondition_error("cm_type: vertex " + std::to_string(chosen[j]) +
                                     " is not free for its facet");
        ++j;
    }
    return count_maximal_independent_sets_without(g, chosen);
}

bool is_gorenstein(const Graph& g) {
    require_classifiable(g);
    if (!is_chordal(g))
        throw precondition_error("is_gorenstein requires a chordal graph");
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) != 1)
            return false;
    return true;
}

SocleComputation socle_computation(const Graph& g) {
    require_classifiable(g);
    if (!is_chordal(g))
        throw precondition_error("socle oracle requires a chordal graph");
    FreeVertexReport fv = free_vertex_facets(maximal_cliques(g));
    auto partition = partition_from(fv, g.vertex_count());
    if (!partition)
        throw precondition_error("socle oracle requires a Cohen-Macaulay graph");

    VertexSet chosen = canonical_free_choice(fv);
    std::uint64_t chosen_mask = to_mask(chosen);

    SocleComputation sc;
    sc.variables = from_mask(g.vertex_mask() & ~chosen_mask);
    if (sc.variables.size() > 20)
        throw cap_error("socle oracle: more than 20 variables");

    // x_a x_b for a <= b in the same trimmed facet F_j minus its chosen free vertex
    for (const auto& F : *partition) {
        VertexSet trimmed = from_mask(to_mask(F) & ~chosen_mask);
        for (std::size_t a = 0; a < trimmed.size(); ++a)
            for (std::size_t b = a; b < trimmed.size(); ++b)
                sc.generators.emplace_back(trimmed[a], trimmed[b]);
    }
    // edges lying inside no free-vertex facet
    for (auto [u, v] : g.edges()) {
        bool inside = false;
        for (const auto& F : *partition) {
            std::uint64_t fm = to_mask(F);
            std::uint64_t em = to_mask({u, v});
            if ((em & fm) == em) {
                inside = true;
                break;
            }
        }
        if (!inside)
            sc.generators.emplace_back(u, v);
    }
    std::sort(sc.generators.begin(), sc.generators.end());
    sc.generators.erase(std::unique(sc.generators.begin(), sc.generators.end()), sc.generators.end());

    // index positions within the variable set
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    for (std::size_t i = 0; i < sc.variables.size(); ++i)
        pos[sc.variables[i]] = static_cast<int>(i);

    std::vector<std::uint32_t> pair_masks; // generators x_a x_b with a < b
    std::vector<bool> has_square(sc.variables.size(), false);
    for (auto [a, b] : sc.generators) {
        if (a == b)
            has_square[pos[a]] = true;
        else
            pair_masks.push_back((std::uint32_t{1} << pos[a]) | (std::uint32_t{1} << pos[b]));
    }

    int nvars = static_cast<int>(sc.variables.size());
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << nvars); ++s) {
        // squarefree monomial with support s; in the ideal iff some
        // squarefree generator divides it
        bool in_ideal = false;
        for (std::uint32_t pm : pair_masks)
            if ((s & pm) == pm) {
                in_ideal = true;
                break;
            }
        if (in_ideal)
            continue;
        ++sc.basis_count;

        bool socle = true;
        for (int k = 0; k < nvars && socle; ++k) {
            if (s >> k & 1) {
                // x_k * u contains x_k^2; need the square generator
                socle = has_square[k];
            } else {
                std::uint32_t sup = s | (std::uint32_t{1} << k);
                bool divisible = false;
                for (std::uint32_t pm : pair_masks)
                    if ((sup & pm) == pm) {
                        divisible = true;
                        break;
                    }
                socle = divisible;
            }
        }
        if (socle)
            ++sc.socle_count;
    }
    return sc;
}

long socle_type_oracle(const Graph& g) { return socle_computation(g).socle_count; }

std::string report_to_json(const ClassificationReport& r) {
    nlohmann::ordered_json j;
    j["chordal"] = r.chordal;
    j["unmixed"] = r.unmixed;
    j["m"] = r.m;
    j["cover_size_min"] = r.cover_size_min;
    j["cover_size_max"] = r.cover_size_max;
    if (r.cm)
        j["cm"] = *r.cm;
    if (r.partition) {
        nlohmann::ordered_json parts = nlohmann::ordered_json::array();
        for (const auto& F : *r.partition)
            parts.push_back(F);
        j["partition"] = parts;
    }
    if (r.cm_type)
        j["type"] = *r.cm_type;
    if (r.gorenstein)
        j["gorenstein"] = *r.gorenstein;
    if (r.chosen_free_vertices)
        j["free_vertices"] = *r.chosen_free_vertices;
    return j.dump(2);
}

namespace {

std::string set_to_string(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

} // namespace

std::string report_to_text(const ClassificationReport& r) {
    std::ostringstream out;
    out << "chordal: " << (r.chordal ? "true" : "false") << '\n';
    if (!r.chordal)
        out << "note: graph is not chordal; the classification criterion does not apply,"
               " no cohen-macaulay verdict\n";
    out << "unmixed: " << (r.unmixed ? "true" : "false") << '\n';
    out << "m: " << r.m << '\n';
    out << "cover-size: " << r.cover_size_min << ".." << r.cover_size_max << '\n';
    if (r.cm) {
        out << "cohen-macaulay: " << (*r.cm ? "true" : "false") << '\n';
        if (r.partition) {
            out << "partition:";
            for (const auto& F : *r.partition)
                out << ' ' << set_to_string(F);
            out << '\n';
        }
        if (r.chosen_free_vertices) {
            out << "free-vertices:";
            for (int v : *r.chosen_free_vertices)
                out << ' ' << v;
            out << '\n';
        }
        if (r.cm_type)
            out << "type: " << *r.cm_type << '\n';
        if (r.gorenstein)
            out << "gorenstein: " << (*r.gorenstein ? "true" : "false") << '\n';
    }
    return out.str();
}

} // namespace cmchordal
