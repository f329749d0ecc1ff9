#include "cmchordal/chordal.hpp"

#include <algorithm>
#include <bit>

namespace cmchordal {

EliminationOrder mcs_order(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1)
        throw precondition_error("mcs_order: empty graph");
    std::vector<int> weight(n + 1, 0);
    std::uint64_t unvisited = g.vertex_mask();
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (std::uint64_t m = unvisited; m; m &= m - 1) {
            int v = std::countr_zero(m) + 1;
            if (best == -1 || weight[v] > weight[best])
                best = v; // lowest label wins ties by scan order
        }
        visit.push_back(best);
        unvisited &= ~(std::uint64_t{1} << (best - 1));
        for (std::uint64_t m = g.neighbor_mask(best) & unvisited; m; m &= m - 1)
            ++weight[std::countr_zero(m) + 1];
    }
    // reverse visit order: for chordal graphs this is a perfect elimination order
    std::reverse(visit.begin(), visit.end());
    return visit;
}

bool is_perfect_elimination(const Graph& g, const EliminationOrder& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw precondition_error("is_perfect_elimination: order has wrong length");
    std::uint64_t seen = 0;
    for (int v : order) {
        if (v < 1 || v > n)
            throw precondition_error("is_perfect_elimination: label out of range");
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if (seen & bit)
            throw precondition_error("is_perfect_elimination: label repeated");
        seen |= bit;
    }

    std::uint64_t remaining = g.vertex_mask();
    for (int v : order) {
        remaining &= ~(std::uint64_t{1} << (v - 1));
        std::uint64_t later = g.neighbor_mask(v) & remaining;
        for (std::uint64_t m = later; m; m &= m - 1) {
            int u = std::countr_zero(m) + 1;
            std::uint64_t others = later & ~(std::uint64_t{1} << (u - 1));
            if ((g.neighbor_mask(u) & others) != others)
                return false;
        }
    }
    return true;
}

bool is_chordal(const Graph& g) {
    if (g.vertex_count() == 0)
        return true;
    return is_perfect_elimination(g, mcs_order(g));
}

namespace {

// Bron-Kerbosch with pivoting over adjacency masks.
void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1;
    int best = -1;
    for (std::uint64_t m = px; m; m &= m - 1) {
        int v = std::countr_zero(m) + 1;
        int cnt = std::popcount(p & g.neighbor_mask(v));
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    std::uint64_t candidates = p & ~g.neighbor_mask(pivot);
    for (std::uint64_t m = candidates; m; m &= m - 1) {
        int v = std::countr_zero(m) + 1;
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        bron_kerbosch(g, r | bit, p & g.neighbor_mask(v), x & g.neighbor_mask(v), out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<std::uint64_t> cliques_from_elimination(const Graph& g, const EliminationOrder& order) {
    // candidate per vertex: {v} + later neighbors; keep the maximal ones
    std::vector<std::uint64_t> cand;
    std::uint64_t remaining = g.vertex_mask();
    for (int v : order) {
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        remaining &= ~bit;
        cand.push_back(bit | (g.neighbor_mask(v) & remaining));
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cand.size() && !dominated; ++j) {
            if (i == j)
                continue;
            if ((cand[i] & cand[j]) == cand[i] && (cand[i] != cand[j] || j < i))
                dominated = true;
        }
        if (!dominated)
            out.push_back(cand[i]);
    }
    return out;
}

} // namespace

FacetList maximal_cliques(const Graph& g) {
    FacetList fl;
    fl.n = g.vertex_count();
    if (fl.n == 0)
        return fl;
    std::vector<std::uint64_t> masks;
    EliminationOrder order = mcs_order(g);
    if (is_perfect_elimination(g, order))
        masks = cliques_from_elimination(g, order);
    else
        bron_kerbosch(g, 0, g.vertex_mask(), 0, masks);
    for (std::uint64_t m : masks)
        fl.facets.push_back(from_mask(m));
    std::sort(fl.facets.begin(), fl.facets.end());
    return fl;
}

std::optional<std::vector<VertexSet>> quasi_forest_leaf_order(const FacetList& f) {
    std::vector<std::uint64_t> live;
    live.reserve(f.facets.size());
    for (const auto& F : f.facets)
        live.push_back(to_mask(F));

    std::vector<std::uint64_t> removal;
    while (!live.empty()) {
        int leaf = -1;
        for (std::size_t i = 0; i < live.size() && leaf == -1; ++i) {
            if (live.size() == 1) {
                leaf = static_cast<int>(i);
                break;
            }
            for (std::size_t j = 0; j < live.size() && leaf == -1; ++j) {
                if (j == i)
                    continue;
                // is live[j] a branch of live[i]?
                std::uint64_t cap = live[i] & live[j];
                bool branch = true;
                for (std::size_t k = 0; k < live.size() && branch; ++k) {
                    if (k == i || k == j)
                        continue;
                    if (((live[k] & live[i]) & ~cap) != 0)
                        branch = false;
                }
                if (branch)
                    leaf = static_cast<int>(i);
            }
        }
        if (leaf == -1)
            return std::nullopt;
        removal.push_back(live[leaf]);
        live.erase(live.begin() + leaf);
    }

    std::vector<VertexSet> order;
    order.reserve(removal.size());
    for (auto it = removal.rbegin(); it != removal.rend(); ++it)
        order.push_back(from_mask(*it));
    return order;
}

FreeVertexReport free_vertex_facets(const FacetList& f) {
    std::vector<int> containment(static_cast<std::size_t>(f.n) + 1, 0);
    for (const auto& F : f.facets)
        for (int v : F)
            ++containment[v];

    FreeVertexReport rep;
    rep.free_per_facet.reserve(f.facets.size());
    for (const auto& F : f.facets) {
        VertexSet free;
        for (int v : F)
            if (containment[v] == 1)
                free.push_back(v);
        if (!free.empty())
            rep.free_facets.push_back(F);
        rep.free_per_facet.push_back(std::move(free));
    }
    rep.m = static_cast<int>(rep.free_facets.size());
    return rep;
}

} // namespace cmchordal
