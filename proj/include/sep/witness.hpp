#pragma once

#include "sep/graph.hpp"
#include "sep/poly.hpp"

namespace sep {

/// A graph whose clique complex has f-polynomial equal to `target`.
struct FlagWitness {
    Graph witness_graph;
    IntPoly f_poly;
    int m = 0;
    IntPoly target;
};

/// sum_k (number of k-cliques) x^k, the empty clique included.
IntPoly clique_f_poly(const Graph& g, const Limits& limits = default_limits());

/// complement(L(G)[K_m]) with its clique polynomial, checked against g(G,mx).
FlagWitness flag_witness(const Graph& g, int m, const Limits& limits = default_limits());

/// m = 2 and target gamma of the suspension. Requires g without even cycles.
FlagWitness witness_a(const Graph& g, const Limits& limits = default_limits());

/// m = 4 and target gamma of type B. Requires g to be a forest.
FlagWitness witness_b(const Graph& g, const Limits& limits = default_limits());

/// i(G[H], x) == i(G, i(H,x) - 1)
bool lex_composition_check(const Graph& g, const Graph& h, const Limits& limits = default_limits());

} // namespace sep
