#pragma once

#include <map>
#include <vector>

#include "sep/graph.hpp"
#include "sep/poly.hpp"

namespace sep {

/// Weight t_C for each simple cycle, keyed by Cycle::vertices.
using MuParams = std::map<std::vector<int>, Rat>;

/// Every simple cycle of g with the same weight t.
MuParams uniform_weights(const Graph& g, const Rat& t, const Limits& limits = default_limits());

/// alpha(G,x) + sum_R (-2)^c(R) alpha(G-R,x) prod_{C in R} t_C, where R runs over
/// nonempty families of vertex-disjoint cycles of any length. Throws
/// PreconditionError when a cycle has no weight.
RatPoly mu_poly(const Graph& g, const MuParams& params, const Limits& limits = default_limits());

/// det(xI - A) by Faddeev-LeVerrier over the integers.
IntPoly char_poly_adjacency(const Graph& g);

/// t_C = (-1/2)^(|C|/2) for even cycles and 0 for odd ones.
MuParams bridge_weights(const Graph& g, const Limits& limits = default_limits());

/// Checks q^n gamma(G, -1/(2q^2)) = mu(G, t, q) at every sample q, with gamma the
/// even-cycle family combination and t the bridge weights. Requires g cactus and
/// every sample nonzero.
bool verify_gamma_mu_bridge(const Graph& g, const std::vector<Rat>& samples, const Limits& limits = default_limits());

/// 1, 2, ..., n+1: enough points to pin down both sides.
std::vector<Rat> default_bridge_samples(const Graph& g);

} // namespace sep
