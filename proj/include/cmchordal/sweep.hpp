#ifndef CMCHORDAL_SWEEP_HPP
#define CMCHORDAL_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cmchordal/graph.hpp"
#include "cmchordal/homology.hpp"

namespace cmchordal {

// What to cross-check per graph. Every check compares two independent
// routes; any mismatch is a disagreement (and would falsify the
// implementation, not the underlying mathematics).
struct SweepOptions {
    std::vector<FieldSpec> fields; // Reisner oracle fields; empty = combinatorial only
    bool check_type = true;        // cm_type against the socle oracle on CM graphs
    bool check_leaf_order = true;  // chordal => facets admit a leaf order
    bool check_leaf_converse = false; // ...and non-chordal => they do not (n <= 6 scale)
    bool check_gorenstein = true;  // structural test == (cm and type 1)
    bool check_cover_sizes = true; // CM => every minimal cover has n - m vertices
    int jobs = 0;                  // 0 = all threads, 1 = serial reference path
    int max_recorded_failures = 8;
};

struct GraphVerdict {
    bool skipped = false; // empty graph or isolated vertex present
    bool chordal = false;
    bool cm = false;
    bool gorenstein = false;
    std::vector<std::string> failures;
};

// Runs every enabled cross-check on one graph.
GraphVerdict check_graph(const Graph& g, const SweepOptions& opt);

struct SweepStats {
    long long graphs = 0;
    long long skipped = 0;
    long long chordal = 0;
    long long cm = 0;
    long long gorenstein = 0;
    long long oracle_runs = 0; // (graph, field) Reisner computations
    long long type_checks = 0;
    long long disagreements = 0; // graphs with at least one failed check
    std::vector<std::string> failures; // first few, ordered by graph index

    bool clean() const { return disagreements == 0; }
};

// All 2^(n choose 2) labeled graphs on n vertices. Graphs with isolated
// vertices are counted as skipped. Capped at n <= 8.
SweepStats sweep_all_graphs(int n, const SweepOptions& opt);

// count generator samples random_chordal(n, extra, seed + i).
SweepStats sweep_random_chordal(int n, int extra, int count, std::uint64_t seed,
                                const SweepOptions& opt);

std::string stats_to_text(const SweepStats& s);
std::string stats_to_json(const SweepStats& s);

} // namespace cmchordal

#endif
