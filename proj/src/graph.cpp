#include "cmchordal/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>

namespace cmchordal {

std::uint64_t to_mask(const VertexSet& s) {
    std::uint64_t m = 0;
    for (int v : s)
        m |= std::uint64_t{1} << (v - 1);
    return m;
}

VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    while (mask) {
        int b = std::countr_zero(mask);
        s.push_back(b + 1);
        mask &= mask - 1;
    }
    return s;
}

bool is_valid_vertex_set(const VertexSet& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n)
            return false;
        if (i > 0 && s[i - 1] >= s[i])
            return false;
    }
    return true;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0)
        throw precondition_error("graph: vertex count must be nonnegative");
    if (n > kMaxVertices)
        throw cap_error("graph: at most " + std::to_string(kMaxVertices) + " vertices supported");
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw precondition_error("edge endpoint out of range 1..n");
    if (u == v)
        throw precondition_error("loop edge not allowed");
    adj_[u - 1] |= std::uint64_t{1} << (v - 1);
    adj_[v - 1] |= std::uint64_t{1} << (u - 1);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3)
        throw precondition_error("cycle: need n >= 3");
    Graph g = path(n);
    g.add_edge(1, n);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(u + a.vertex_count(), v + a.vertex_count());
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t m : adj_)
        total += std::popcount(m);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
        return false;
    return (adj_[u - 1] >> (v - 1)) & 1;
}

int Graph::degree(int v) const { return std::popcount(neighbor_mask(v)); }

std::uint64_t Graph::neighbor_mask(int v) const {
    if (v < 1 || v > n_)
        throw precondition_error("vertex label out of range 1..n");
    return adj_[v - 1];
}

VertexSet Graph::neighbors(int v) const { return from_mask(neighbor_mask(v)); }

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u) {
        std::uint64_t later = u >= 64 ? 0 : adj_[u - 1] >> u << u; // neighbors > u
        for (std::uint64_t m = later; m; m &= m - 1)
            out.emplace_back(u, std::countr_zero(m) + 1);
    }
    return out;
}

bool Graph::has_isolated_vertex() const {
    for (int v = 1; v <= n_; ++v)
        if (adj_[v - 1] == 0)
            return true;
    return false;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int v = 1; v <= n_; ++v)
        g.adj_[v - 1] = ~adj_[v - 1] & vertex_mask() & ~(std::uint64_t{1} << (v - 1));
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!is_valid_vertex_set(s, g.vertex_count()))
        throw precondition_error("induced_subgraph: member out of range or not sorted");
    InducedSubgraph out;
    out.labels = s;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                edges.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    out.graph = Graph::from_edges(static_cast<int>(s.size()), edges);
    return out;
}

namespace {

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos)
            continue;
        if (line[pos] == '#')
            continue;
        return true;
    }
    return false;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!next_data_line(in, line))
        throw parse_error("empty input: expected header line \"n m\"");

    long long n = 0, m = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra))
            throw parse_error("malformed header line: expected \"n m\", got \"" + line + "\"");
    }
    if (n < 1)
        throw parse_error("vertex count must be >= 1");
    if (n > kMaxVertices)
        throw cap_error("vertex count " + std::to_string(n) + " exceeds supported maximum " +
                        std::to_string(kMaxVertices));
    if (m < 0)
        throw parse_error("edge count must be >= 0");

    Graph g(static_cast<int>(n));
    for (long long k = 0; k < m; ++k) {
        if (!next_data_line(in, line))
            throw parse_error("expected " + std::to_string(m) + " edge lines, got " + std::to_string(k));
        std::istringstream es(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw parse_error("malformed edge line: \"" + line + "\"");
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error("edge label out of range 1.." + std::to_string(n) + ": \"" + line + "\"");
        if (u == v)
            throw parse_error("loop edge at vertex " + std::to_string(u));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error("duplicate edge {" + std::to_string(std::min(u, v)) + "," +
                              std::to_string(std::max(u, v)) + "}");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line))
        throw parse_error("trailing content after " + std::to_string(m) + " edges: \"" + line + "\"");
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph random_chordal(int n, int extra, std::uint64_t seed) {
    if (n < 1)
        throw precondition_error("random_chordal: n must be >= 1");
    if (n > kMaxVertices)
        throw cap_error("random_chordal: n exceeds supported maximum");
    if (extra < 0)
        throw precondition_error("random_chordal: extra must be >= 0");

    std::mt19937_64 rng(seed);
    Graph g(n);
    std::vector<VertexSet> cliques;
    cliques.push_back({1});
    for (int v = 2; v <= n; ++v) {
        VertexSet base = cliques[rng() % cliques.size()];
        int limit = std::min<int>(static_cast<int>(base.size()), extra + 1);
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(limit));
        // partial Fisher-Yates: first k entries become the attachment set
        for (int i = 0; i < k; ++i) {
            std::size_t j = i + rng() % (base.size() - i);
            std::swap(base[i], base[j]);
        }
        base.resize(k);
        std::sort(base.begin(), base.end());
        for (int u : base)
            g.add_edge(u, v);
        base.push_back(v);
        cliques.push_back(std::move(base));
    }
    return g;
}

} // namespace cmchordal
