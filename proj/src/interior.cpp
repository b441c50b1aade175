#include "sep/interior.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "sep/errors.hpp"
#include "sep/matching.hpp"

namespace sep {

void validate_hypergraph(const Hypergraph& h) {
    if (h.vertex_count < 0) throw PreconditionError("negative hypergraph vertex count");
    for (const auto& e : h.hyperedges) {
        if (e.empty()) throw PreconditionError("empty hyperedge");
        for (int v : e)
            if (v < 1 || v > h.vertex_count) throw PreconditionError("hyperedge vertex " + std::to_string(v) + " out of range");
    }
}

Graph bip(const Hypergraph& h) {
    validate_hypergraph(h);
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < h.hyperedges.size(); ++j) {
        int node = h.vertex_count + static_cast<int>(j) + 1;
        std::vector<int> vs = h.hyperedges[j];
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int v : vs) edges.emplace_back(v, node);
    }
    return Graph(h.vertex_count + static_cast<int>(h.hyperedges.size()), std::move(edges));
}

Hypergraph hypergraph_from_bipartite(const Graph& g, const std::vector<int>& hyperedge_side) {
    std::vector<char> is_edge_node(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int v : hyperedge_side) {
        if (v < 1 || v > g.order()) throw PreconditionError("hyperedge node " + std::to_string(v) + " outside graph");
        is_edge_node[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> ground_label(static_cast<std::size_t>(g.order()) + 1, 0);
    Hypergraph h;
    for (int v = 1; v <= g.order(); ++v)
        if (!is_edge_node[static_cast<std::size_t>(v)]) ground_label[static_cast<std::size_t>(v)] = ++h.vertex_count;
    for (const auto& e : g.edges())
        if (is_edge_node[static_cast<std::size_t>(e.u)] == is_edge_node[static_cast<std::size_t>(e.v)])
            throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} does not cross the sides");
    for (int node : hyperedge_side) {
        std::vector<int> members;
        for (int w : g.neighbors(node)) members.push_back(ground_label[static_cast<std::size_t>(w)]);
        if (members.empty()) throw PreconditionError("hyperedge node " + std::to_string(node) + " is isolated");
        h.hyperedges.push_back(std::move(members));
    }
    return h;
}

Hypergraph tilde_hypergraph(const Graph& g, const Bipartition& b, bool transposed) {
    Graph t = tilde(g, b);
    int n = g.order();
    std::vector<int> side = transposed ? b.part1 : b.part2;
    side.push_back(transposed ? n + 2 : n + 1);
    std::sort(side.begin(), side.end());
    return hypergraph_from_bipartite(t, side);
}

namespace {

// Component labels of the ground vertices, renumbered by first occurrence.
using Partition = std::vector<int>;

void canonicalize(Partition& p) {
    std::map<int, int> renum;
    for (int& c : p) {
        auto [it, inserted] = renum.emplace(c, static_cast<int>(renum.size()));
        c = it->second;
    }
}

} // namespace

std::vector<HypertreeProfile> hypertrees(const Hypergraph& h, const Limits& limits) {
    if (!is_connected(bip(h)) || h.vertex_count == 0)
        throw PreconditionError("interior polynomial needs a connected incidence graph");
    // Spanning trees of Bip H, built one hyperedge node at a time: node j is joined
    // to one ground vertex in each of the components it links. Trees that reach the
    // same (component partition, degree prefix) are merged, since only the
    // hyperedge degree profile is observed.
    std::set<std::pair<Partition, HypertreeProfile>> layer;
    Partition start(static_cast<std::size_t>(h.vertex_count));
    for (int i = 0; i < h.vertex_count; ++i) start[static_cast<std::size_t>(i)] = i;
    layer.emplace(start, HypertreeProfile{});
    std::size_t states = 0;

    for (const auto& edge : h.hyperedges) {
        std::set<std::pair<Partition, HypertreeProfile>> next;
        for (const auto& [part, prefix] : layer) {
            std::vector<int> touched;
            for (int v : edge) touched.push_back(part[static_cast<std::size_t>(v - 1)]);
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            std::size_t k = touched.size();
            if (k > 30) throw BoundExceeded("hyperedge spans too many components");
            for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
                Partition merged = part;
                int target = -1, chosen = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    if (!(pick >> i & 1)) continue;
                    ++chosen;
                    if (target < 0) target = touched[i];
                    for (int& c : merged)
                        if (c == touched[i]) c = target;
                }
                canonicalize(merged);
                HypertreeProfile profile = prefix;
                profile.push_back(chosen - 1);
                next.emplace(std::move(merged), std::move(profile));
                if (++states > limits.max_spanning_states)
                    throw BoundExceeded("spanning tree enumeration exceeds bound " + std::to_string(limits.max_spanning_states));
            }
        }
        layer = std::move(next);
    }

    std::set<HypertreeProfile> out;
    for (const auto& [part, profile] : layer)
        if (std::all_of(part.begin(), part.end(), [](int c) { return c == 0; })) out.insert(profile);
    return {out.begin(), out.end()};
}

IntPoly interior_poly(const Hypergraph& h, const std::vector<int>& order, const Limits& limits) {
    std::size_t m = h.hyperedges.size();
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < m; ++i)
        if (check.size() != m || check[i] != static_cast<int>(i)) throw PreconditionError("order must be a permutation of hyperedge indices");

    auto trees = hypertrees(h, limits);
    std::set<HypertreeProfile> lookup(trees.begin(), trees.end());
    std::vector<Int> coeffs(m + 1, Int(0));
    for (const auto& f : trees) {
        int inactive = 0;
        for (std::size_t p = 0; p < m; ++p) {
            auto j = static_cast<std::size_t>(order[p]);
            if (f[j] == 0) continue;
            for (std::size_t q = 0; q < p; ++q) {
                HypertreeProfile moved = f;
                --moved[j];
                ++moved[static_cast<std::size_t>(order[q])];
                if (lookup.count(moved)) {
                    ++inactive;
                    break;
                }
            }
        }
        coeffs[static_cast<std::size_t>(inactive)] += 1;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly interior_poly(const Hypergraph& h, const Limits& limits) {
    std::vector<int> order(h.hyperedges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return interior_poly(h, order, limits);
}

IntPoly interior_tilde_fast(const Graph& g, const Bipartition& b, const Limits& limits) {
    validate_bipartition(g, b);
    return IntPoly(matched_vertex_sets(g, limits));
}

IntPoly cut_sum_gamma(const Graph& g, const Limits& limits, int jobs) {
    int n = g.order();
    if (n < 1) throw PreconditionError("cut sum needs at least one vertex");
    if (n > limits.max_cut_sum_vertices || n > 63)
        throw BoundExceeded("cut sum over " + std::to_string(n) + " vertices exceeds bound " +
                            std::to_string(limits.max_cut_sum_vertices));
    Limits inner = limits;
    inner.max_matching_vertices = std::max(inner.max_matching_vertices, n);

    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    auto accumulate = [&](std::uint64_t begin, std::uint64_t end) {
        IntPoly sum;
        for (std::uint64_t i = begin; i < end; ++i) {
            Cut cut = cut_from_set(g, cut_set_at(i));
            sum += interior_tilde_fast(cut.subgraph, cut.bipartition(), inner).scale_arg(Int(4));
        }
        return sum;
    };

    IntPoly sum;
    std::uint64_t workers = static_cast<std::uint64_t>(std::max(jobs, 1));
    if (workers == 1 || total < 64) {
        sum = accumulate(0, total);
    } else {
        std::vector<std::future<IntPoly>> parts;
        for (std::uint64_t w = 0; w < workers; ++w)
            parts.push_back(std::async(std::launch::async, accumulate, total * w / workers, total * (w + 1) / workers));
        for (auto& p : parts) sum += p.get();
    }

    RatPoly gamma = to_rat(sum) * Rat(Int(1), Int(total));
    try {
        return to_int(gamma);
    } catch (const VerificationError&) {
        throw VerificationError("cut sum " + sum.to_string() + " is not divisible by 2^" + std::to_string(n - 1));
    }
}

} // namespace sep
