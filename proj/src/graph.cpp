#include "sep/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sep/errors.hpp"

namespace sep {

namespace {

void check_mask_capacity(const Graph& g, const char* what) {
    if (g.order() > 64)
        throw BoundExceeded(std::string(what) + " supports at most 64 vertices, got " + std::to_string(g.order()));
}

} // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw PreconditionError("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (const auto& e : edges) {
        if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.v > n)
            throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} outside vertex range 1.." + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw PreconditionError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
        adj_[static_cast<std::size_t>(e.u - 1)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v - 1)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::with_dedup(int n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

bool Graph::adjacent(int u, int v) const {
    if (u < 1 || u > n_) return false;
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<VertexMask> Graph::neighbor_masks() const {
    check_mask_capacity(*this, "bitmask graph routines");
    std::vector<VertexMask> masks(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        masks[static_cast<std::size_t>(e.u - 1)] |= vertex_bit(e.v);
        masks[static_cast<std::size_t>(e.v - 1)] |= vertex_bit(e.u);
    }
    return masks;
}

VertexMask Graph::all_vertices_mask() const {
    check_mask_capacity(*this, "bitmask graph routines");
    return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

void validate_bipartition(const Graph& g, const Bipartition& b) {
    std::vector<int> side(static_cast<std::size_t>(g.order()) + 1, 0);
    auto mark = [&](const std::vector<int>& part, int label) {
        for (int v : part) {
            if (v < 1 || v > g.order()) throw PreconditionError("bipartition names vertex " + std::to_string(v) + " outside the graph");
            if (side[static_cast<std::size_t>(v)] != 0) throw PreconditionError("vertex " + std::to_string(v) + " appears twice in bipartition");
            side[static_cast<std::size_t>(v)] = label;
        }
    };
    mark(b.part1, 1);
    mark(b.part2, 2);
    for (int v = 1; v <= g.order(); ++v)
        if (side[static_cast<std::size_t>(v)] == 0) throw PreconditionError("vertex " + std::to_string(v) + " missing from bipartition");
    for (const auto& e : g.edges())
        if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)])
            throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} inside one part");
}

std::optional<Bipartition> two_coloring(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()) + 1, -1);
    for (int s = 1; s <= g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 1; v <= g.order(); ++v) (color[static_cast<std::size_t>(v)] == 0 ? b.part1 : b.part2).push_back(v);
    return b;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp{s}, stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                comp.push_back(w);
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

Graph suspension(const Graph& g) {
    int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + 1);
    return Graph(n + 1, std::move(edges));
}

Graph tilde(const Graph& g, const Bipartition& b) {
    validate_bipartition(g, b);
    int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (int i : b.part1) edges.emplace_back(i, n + 1);
    for (int j : b.part2) edges.emplace_back(j, n + 2);
    edges.emplace_back(n + 1, n + 2);
    return Graph(n + 2, std::move(edges));
}

InducedSubgraph delete_vertex_set(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int v : removed) {
        if (v < 1 || v > g.order()) throw PreconditionError("cannot delete vertex " + std::to_string(v));
        gone[static_cast<std::size_t>(v)] = 1;
    }
    InducedSubgraph out;
    std::vector<int> relabel(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int v = 1; v <= g.order(); ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        out.label_map.push_back(v);
        relabel[static_cast<std::size_t>(v)] = static_cast<int>(out.label_map.size());
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)])
            edges.emplace_back(relabel[static_cast<std::size_t>(e.u)], relabel[static_cast<std::size_t>(e.v)]);
    out.graph = Graph(static_cast<int>(out.label_map.size()), std::move(edges));
    return out;
}

InducedSubgraph delete_vertex_set(const Graph& g, VertexMask removed) {
    std::vector<int> vs;
    for (int v = 1; v <= g.order() && v <= 64; ++v)
        if (removed & vertex_bit(v)) vs.push_back(v);
    return delete_vertex_set(g, vs);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 1; u <= g.order(); ++u)
        for (int v = u + 1; v <= g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges));
}

Graph line_graph(const Graph& g) {
    const auto& es = g.edges();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
                edges.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return Graph(static_cast<int>(es.size()), std::move(edges));
}

Graph lex_product(const Graph& g, const Graph& h) {
    int m = h.order();
    auto label = [m](int a, int x) { return (a - 1) * m + x; };
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        for (int x = 1; x <= m; ++x)
            for (int y = 1; y <= m; ++y) edges.emplace_back(label(e.u, x), label(e.v, y));
    for (int a = 1; a <= g.order(); ++a)
        for (const auto& e : h.edges()) edges.emplace_back(label(a, e.u), label(a, e.v));
    return Graph(g.order() * m, std::move(edges));
}

Graph lex_product_complete(const Graph& g, int m) {
    if (m < 1) throw PreconditionError("lexicographic product needs m >= 1");
    return lex_product(g, families::complete(m));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), std::move(edges));
}

namespace families {

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
    return Graph(leaves + 1, std::move(edges));
}

} // namespace families

// ---------------------------------------------------------------------------

Bipartition Cut::bipartition() const {
    Bipartition b;
    for (int v = 1; v <= subgraph.order(); ++v) (defining_set & vertex_bit(v) ? b.part1 : b.part2).push_back(v);
    return b;
}

std::vector<Cut> cuts(const Graph& g, const Limits& limits) {
    int n = g.order();
    if (n < 1) throw PreconditionError("cuts need at least one vertex");
    if (n > limits.max_cut_vertices || n > 63)
        throw BoundExceeded("cut enumeration over " + std::to_string(n) + " vertices exceeds bound " +
                            std::to_string(limits.max_cut_vertices));
    std::vector<Cut> out;
    out.reserve(std::size_t{1} << (n - 1));
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << (n - 1)); ++i) out.push_back(cut_from_set(g, cut_set_at(i)));
    return out;
}

Cut cut_from_set(const Graph& g, VertexMask s) {
    if (g.order() < 1 || g.order() > 64) throw PreconditionError("cut needs 1..64 vertices");
    VertexMask all = g.all_vertices_mask();
    s &= all;
    if (!(s & 1)) s = all & ~s;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (((s & vertex_bit(e.u)) != 0) != ((s & vertex_bit(e.v)) != 0)) edges.push_back(e);
    return Cut{s, Graph(g.order(), std::move(edges))};
}

// ---------------------------------------------------------------------------

std::vector<Edge> Cycle::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

int CycleFamily::edge_count() const {
    int total = 0;
    for (const auto& c : cycles) total += c.length();
    return total;
}

std::vector<Cycle> simple_cycles(const Graph& g, const Limits& limits) {
    auto nb = g.neighbor_masks();
    std::vector<Cycle> out;
    std::vector<int> path;
    // Each cycle is found from its smallest vertex s, walking only through larger
    // vertices, and kept in the orientation where path[1] < path.back().
    for (int s = 1; s <= g.order(); ++s) {
        path.assign(1, s);
        VertexMask above = ~((VertexMask{2} << (s - 1)) - 1);
        auto dfs = [&](auto&& self, int v, VertexMask used) -> void {
            VertexMask next = nb[static_cast<std::size_t>(v - 1)];
            if (path.size() >= 3 && (next & vertex_bit(s)) && path[1] < path.back()) {
                if (out.size() >= limits.max_cycles)
                    throw BoundExceeded("simple cycle count exceeds bound " + std::to_string(limits.max_cycles));
                out.push_back(Cycle{path, used});
            }
            next &= above & ~used;
            while (next) {
                int w = std::countr_zero(next) + 1;
                next &= next - 1;
                path.push_back(w);
                self(self, w, used | vertex_bit(w));
                path.pop_back();
            }
        };
        dfs(dfs, s, vertex_bit(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CycleFamily> disjoint_families(const std::vector<Cycle>& pool) {
    std::vector<CycleFamily> out;
    CycleFamily current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool[i].mask & current.mask) continue;
            current.cycles.push_back(pool[i]);
            current.mask |= pool[i].mask;
            out.push_back(current);
            self(self, i + 1);
            current.mask &= ~pool[i].mask;
            current.cycles.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<CycleFamily> even_cycle_families(const Graph& g, const Limits& limits) {
    std::vector<Cycle> even;
    for (auto& c : simple_cycles(g, limits))
        if (c.even()) even.push_back(std::move(c));
    return disjoint_families(even);
}

std::vector<CycleFamily> all_cycle_families(const Graph& g, const Limits& limits) {
    return disjoint_families(simple_cycles(g, limits));
}

GraphClassification classify(const Graph& g, const Limits& limits) {
    GraphClassification c;
    c.connected = is_connected(g);
    c.bipartition = two_coloring(g);
    c.bipartite = c.bipartition.has_value();
    c.simple_cycles = simple_cycles(g, limits);
    c.forest = c.simple_cycles.empty();

    std::vector<Edge> all_edges, even_edges;
    for (const auto& cyc : c.simple_cycles) {
        auto es = cyc.edges();
        all_edges.insert(all_edges.end(), es.begin(), es.end());
        if (cyc.even()) {
            c.has_even_cycle = true;
            even_edges.insert(even_edges.end(), es.begin(), es.end());
        }
    }
    auto no_repeats = [](std::vector<Edge>& v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    c.cactus = no_repeats(all_edges);
    c.unique_even_cycle_condition = no_repeats(even_edges);
    return c;
}

} // namespace sep
