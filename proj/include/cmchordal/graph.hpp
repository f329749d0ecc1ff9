#ifndef CMCHORDAL_GRAPH_HPP
#define CMCHORDAL_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cmchordal/errors.hpp"

namespace cmchordal {

// Vertices are labeled 1..n throughout. A VertexSet is sorted ascending with
// no duplicates; helpers below convert to/from bitmasks (bit v-1 <-> label v).
using Vertex = int;
using VertexSet = std::vector<Vertex>;

inline constexpr int kMaxVertices = 64;

std::uint64_t to_mask(const VertexSet& s);
VertexSet from_mask(std::uint64_t mask);
bool is_valid_vertex_set(const VertexSet& s, int n);

// Finite simple graph: no loops, no multi-edges. n = 0 is permitted so that
// induced subgraphs can be empty, but parsing and classification require
// n >= 1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph edgeless(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph disjoint_union(const Graph& a, const Graph& b);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::uint64_t neighbor_mask(int v) const;
    VertexSet neighbors(int v) const;
    std::uint64_t vertex_mask() const;

    // Edges as sorted pairs (u < v), lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool has_isolated_vertex() const;
    Graph complement() const;

    bool operator==(const Graph&) const = default;

private:
    void add_edge(int u, int v);

    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    friend Graph random_chordal(int n, int extra, std::uint64_t seed);
    friend Graph parse_graph(const std::string& text);
};

struct InducedSubgraph {
    Graph graph;
    // labels[i] = original label of the subgraph's vertex i+1.
    std::vector<int> labels;
};

// Induced subgraph on s, relabeled 1..|s|. s may be empty.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Edge-list format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' are comments. The parser accepts u > v and
// normalizes; loops and duplicate edges are errors.
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

// Normalized form: "n m" header, then sorted "u v" lines with u < v.
std::string serialize_graph(const Graph& g);

// Chordal by construction: vertex v >= 2 attaches to a random nonempty
// subset of an existing clique, so the reverse insertion order is a perfect
// elimination order. `extra` bounds how large the attachment sets get
// (extra = 0 yields trees). Deterministic for fixed (n, extra, seed), and
// the output has no isolated vertices for n >= 2.
Graph random_chordal(int n, int extra, std::uint64_t seed);

} // namespace cmchordal

#endif
