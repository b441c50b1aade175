#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sep/limits.hpp"

namespace sep {

/// Undirected edge {u, v} with u < v. Vertices are labeled 1..n.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex subsets of graphs with at most 64 vertices; bit (i-1) is vertex i.
using VertexMask = std::uint64_t;

inline VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }

/// Finite simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Validates labels and rejects self-loops and duplicate edges.
    Graph(int n, std::vector<Edge> edges);

    /// Like the constructor but silently drops repeated edges.
    static Graph with_dedup(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    /// Neighbourhood bitmasks indexed by vertex-1. Requires order() <= 64.
    std::vector<VertexMask> neighbor_masks() const;
    VertexMask all_vertices_mask() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct Bipartition {
    std::vector<int> part1;
    std::vector<int> part2;
};

/// Throws PreconditionError unless b partitions [n] with every edge crossing.
void validate_bipartition(const Graph& g, const Bipartition& b);

/// Proper 2-colouring with the smallest vertex of each component in part1.
std::optional<Bipartition> two_coloring(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);
/// Vertex lists of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

// ---------------------------------------------------------------------------
// Constructions

/// G plus vertex n+1 joined to every vertex.
Graph suspension(const Graph& g);

/// Bipartite augmentation on [n+2]: V1 joined to n+1, V2 and n+1 joined to n+2.
Graph tilde(const Graph& g, const Bipartition& b);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> label_map; // label_map[i-1] = original label of new vertex i
};

/// Induced subgraph on [n] \ removed, densely relabeled in increasing order.
InducedSubgraph delete_vertex_set(const Graph& g, const std::vector<int>& removed);
InducedSubgraph delete_vertex_set(const Graph& g, VertexMask removed);

Graph complement(const Graph& g);

/// Vertices are the edges of g in sorted order; adjacent when they share an endpoint.
Graph line_graph(const Graph& g);

/// Lexicographic product g[h]; vertex (a, x) gets label (a-1)*|h| + x.
Graph lex_product(const Graph& g, const Graph& h);
Graph lex_product_complete(const Graph& g, int m);

Graph disjoint_union(const Graph& a, const Graph& b);

namespace families {
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
} // namespace families

// ---------------------------------------------------------------------------
// Cuts

/// The cut E_S. Stored with vertex 1 in S; the empty cut is stored as S = [n].
struct Cut {
    VertexMask defining_set = 0;
    Graph subgraph;

    Bipartition bipartition() const;
};

/// All 2^(n-1) cuts, ordered by defining set as a bitmask.
std::vector<Cut> cuts(const Graph& g, const Limits& limits = default_limits());

/// The cut E_S for a given S (canonicalized to contain vertex 1).
Cut cut_from_set(const Graph& g, VertexMask s);

/// Defining set of the index-th cut in the order used by cuts().
inline VertexMask cut_set_at(std::uint64_t index) { return (index << 1) | 1; }

// ---------------------------------------------------------------------------
// Cycles

/// Simple cycle as a vertex sequence rotated to start at its smallest vertex,
/// oriented so the second vertex is smaller than the last.
struct Cycle {
    std::vector<int> vertices;
    VertexMask mask = 0;

    int length() const { return static_cast<int>(vertices.size()); }
    bool even() const { return vertices.size() % 2 == 0; }
    std::vector<Edge> edges() const;

    friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.vertices <=> b.vertices; }
    friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices == b.vertices; }
};

/// Every simple cycle once, sorted. Throws BoundExceeded past limits.max_cycles.
std::vector<Cycle> simple_cycles(const Graph& g, const Limits& limits = default_limits());

/// A set of pairwise vertex-disjoint cycles.
struct CycleFamily {
    std::vector<Cycle> cycles;
    VertexMask mask = 0;

    int count() const { return static_cast<int>(cycles.size()); }
    int edge_count() const;
};

/// All nonempty families of pairwise vertex-disjoint cycles drawn from `pool`.
std::vector<CycleFamily> disjoint_families(const std::vector<Cycle>& pool);

/// Nonempty families of vertex-disjoint even cycles.
std::vector<CycleFamily> even_cycle_families(const Graph& g, const Limits& limits = default_limits());

/// Nonempty families of vertex-disjoint cycles of any length.
std::vector<CycleFamily> all_cycle_families(const Graph& g, const Limits& limits = default_limits());

struct GraphClassification {
    bool connected = false;
    bool bipartite = false;
    std::optional<Bipartition> bipartition;
    bool forest = false;
    bool cactus = false;
    bool unique_even_cycle_condition = false;
    bool has_even_cycle = false;
    std::vector<Cycle> simple_cycles;
};

GraphClassification classify(const Graph& g, const Limits& limits = default_limits());

// ---------------------------------------------------------------------------
// Text formats

/// Edge list: one "u v" per line, '#' comments, optional "n <count>" header.
Graph parse_edge_list(const std::string& text, bool strict = false, std::optional<int> declared_n = std::nullopt);

/// {"n": int, "edges": [[u, v], ...]}
Graph parse_graph_json(const std::string& text, bool strict = false);

/// Picks the structured format when the text starts with '{'.
Graph parse_graph(const std::string& text, bool strict = false);

Graph read_graph_file(const std::string& path, bool strict = false);

std::string to_edge_list(const Graph& g);

} // namespace sep
