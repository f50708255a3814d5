#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lapbound {

/// Sorted set of distinct vertex indices.
struct VertexSubset {
    std::vector<int> members;

    VertexSubset() = default;
    explicit VertexSubset(std::vector<int> m);

    static VertexSubset of(std::initializer_list<int> m);
    static VertexSubset full(int n);
    static VertexSubset from_mask(std::uint64_t mask, int n);

    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }
    bool contains(int v) const;
    VertexSubset complement(int n) const;
    /// Bit mask of members; requires every member < 64.
    std::uint64_t mask64() const;

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
};

/// Lexicographic order on the sorted member lists (deterministic tie-break).
bool lex_less(const VertexSubset& a, const VertexSubset& b);

std::string to_string(const VertexSubset& u);
/// Parses "0,2,5"; sorts and rejects duplicates.
VertexSubset parse_vertex_list(const std::string& text);

struct EdgeSet {
    std::vector<std::pair<int, int>> edges;  // (min,max), sorted
    int size() const { return static_cast<int>(edges.size()); }
};

/// Immutable simple undirected graph.  Adjacency is kept as bitset rows so
/// neighborhood intersections run one word at a time; values are safe to
/// share across threads after construction.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long edge_count() const { return e_; }
    int degree(int v) const;
    const std::vector<int>& degrees() const { return degrees_; }
    bool adjacent(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    /// All edges as (min,max) pairs, sorted.
    std::vector<std::pair<int, int>> edges() const;

    int words_per_row() const { return words_; }
    const std::uint64_t* row(int v) const;

    /// Row-width bit mask of a subset, for neighbors_in.
    std::vector<std::uint64_t> subset_mask(const VertexSubset& u) const;
    /// |N(v) ∩ S| where S is a row-width mask.
    int neighbors_in(int v, const std::vector<std::uint64_t>& mask) const;

    bool is_connected() const;

private:
    int n_;
    int words_;
    long long e_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;
};

/// graph6 decode failure; byte_offset is the 0-based offending position.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t byte_offset);
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Decodes one graph6 line (the single-byte size form, n <= 62).
Graph parse_graph6(const std::string& line);
/// Encodes; rejects graphs with more than 62 vertices.
std::string write_graph6(const Graph& g);

/// Vertices outside U with at least one neighbor in U.
VertexSubset vertex_boundary(const Graph& g, const VertexSubset& u);
/// Edges with exactly one endpoint in U.
EdgeSet edge_boundary(const Graph& g, const VertexSubset& u);
long long edge_boundary_size(const Graph& g, const VertexSubset& u);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new index -> original vertex
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& u);

/// Connected components, ordered by smallest contained vertex.
std::vector<VertexSubset> components(const Graph& g);

// Deterministic generators.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph empty_graph(int n);
Graph join(const Graph& a, const Graph& b);
Graph complete_multipartite(const std::vector<int>& part_sizes);
/// G(n,p): pair (i,j), i<j, scanned in row-major order; edge present when the
/// next SplitMix64 double is < p.
Graph gnp(int n, double p, std::uint64_t seed);

} // namespace lapbound
