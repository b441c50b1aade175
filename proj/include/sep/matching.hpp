#pragma once

#include <vector>

#include "sep/graph.hpp"
#include "sep/poly.hpp"

namespace sep {

/// m[k] = number of k-matchings; mv[k] = |M(G,k)|, the number of distinct
/// vertex sets covered by k-matchings. Both start with 1 at k = 0.
struct MatchingProfile {
    std::vector<Int> m;
    std::vector<Int> mv;
};

/// k-matching counts m_k(G), trimmed after the last nonzero entry.
std::vector<Int> matching_counts(const Graph& g);

/// g(G,x) = sum_k m_k x^k
IntPoly matching_generating_poly(const Graph& g);

/// alpha(G,x) = sum_k (-1)^k m_k x^(n-2k)
IntPoly matching_poly(const Graph& g);

/// |M(G,k)| by enumerating matchings and deduplicating their vertex sets.
std::vector<Int> matched_vertex_sets(const Graph& g, const Limits& limits = default_limits());

/// |M(G,k)| = m_k(G) + sum_R (-1)^c(R) m_{k-|E(R)|/2}(G - R), R over vertex-disjoint
/// even-cycle families. Requires every edge to lie on at most one even cycle.
std::vector<Int> matched_vertex_sets_formula(const Graph& g, const Limits& limits = default_limits());

MatchingProfile matching_profile(const Graph& g, const Limits& limits = default_limits());

/// i(G,x) = sum_k (number of independent k-sets) x^k
IntPoly independence_poly(const Graph& g, const Limits& limits = default_limits());

} // namespace sep
