#pragma once

#include <vector>

#include "sep/graph.hpp"
#include "sep/poly.hpp"

namespace sep {

/// Hypergraph with ground vertices 1..vertex_count and an ordered multiset of
/// nonempty hyperedges.
struct Hypergraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> hyperedges;
};

void validate_hypergraph(const Hypergraph& h);

/// Incidence graph: ground vertex v keeps label v, hyperedge j gets label vertex_count + j + 1.
Graph bip(const Hypergraph& h);

/// Reads a bipartite graph as a hypergraph whose hyperedges are the neighbourhoods
/// of `hyperedge_side` (in the given order) over the remaining vertices.
Hypergraph hypergraph_from_bipartite(const Graph& g, const std::vector<int>& hyperedge_side);

/// G~ as a hypergraph. By default the hyperedges are V2 + {n+1} and the ground set is
/// V1 + {n+2}; `transposed` swaps the two roles.
Hypergraph tilde_hypergraph(const Graph& g, const Bipartition& b, bool transposed = false);

/// Degree minus one at each hyperedge of some spanning tree of Bip H.
using HypertreeProfile = std::vector<int>;

/// Sorted, duplicate-free HT(H). Throws PreconditionError if Bip H is disconnected.
std::vector<HypertreeProfile> hypertrees(const Hypergraph& h, const Limits& limits = default_limits());

/// Interior polynomial from hypertrees and internal activity with respect to
/// `order` (a permutation of hyperedge indices; first = smallest).
IntPoly interior_poly(const Hypergraph& h, const std::vector<int>& order, const Limits& limits = default_limits());
IntPoly interior_poly(const Hypergraph& h, const Limits& limits = default_limits());

/// I_{G~}(x) = sum_k |M(G,k)| x^k for bipartite g.
IntPoly interior_tilde_fast(const Graph& g, const Bipartition& b, const Limits& limits = default_limits());

/// (1/2^(n-1)) sum over cuts H of I_{H~}(4x). Throws VerificationError if not integral.
IntPoly cut_sum_gamma(const Graph& g, const Limits& limits = default_limits(), int jobs = 1);

} // namespace sep
