#pragma once

#include <string>

#include "sep/graph.hpp"
#include "sep/poly.hpp"

namespace sep {

enum class Method { formula, cut_sum, interior, ehrhart };

std::string method_name(Method m);

/// gamma, h* and normalized volume of one polytope, with the method that produced them.
struct SepResult {
    IntPoly gamma;
    IntPoly hstar;
    Int volume;
    int dim = 0;
    Method method = Method::formula;
};

/// Fills h* and volume from gamma and checks volume = 2^dim gamma(1/4).
SepResult result_from_gamma(IntPoly gamma, int dim, Method method);

/// Fills gamma and volume from a palindromic h* of degree <= dim.
SepResult result_from_hstar(IntPoly hstar, int dim, Method method);

// ---------------------------------------------------------------------------
// Type A, suspension of G (dimension n)

/// g(G,2x) + sum_R (-2)^c(R) g(G-R,2x) x^(|E(R)|/2) over vertex-disjoint even-cycle
/// families R. Requires every edge of g on at most one even cycle.
SepResult gamma_a_suspension(const Graph& g, const Limits& limits = default_limits());

/// g(G,2x). Requires g to have no even cycle.
SepResult gamma_a_suspension_noeven(const Graph& g, const Limits& limits = default_limits());

/// Sum over cuts. Valid for every g up to limits.max_cut_sum_vertices.
SepResult gamma_a_cut_sum(const Graph& g, const Limits& limits = default_limits(), int jobs = 1);

/// Lattice-point counting on the suspension.
SepResult gamma_a_ehrhart(const Graph& g, const Limits& limits = default_limits());

/// Formula when the even-cycle condition holds, cut sum otherwise.
SepResult gamma_a_auto(const Graph& g, const Limits& limits = default_limits(), int jobs = 1);

// ---------------------------------------------------------------------------
// Type B (dimension n)

/// g(G,4x) + sum_R (-1)^c(R) g(G-R,4x) (4x)^(|E(R)|/2). Requires g bipartite and cactus.
SepResult gamma_b(const Graph& g, const Limits& limits = default_limits());

/// I_{G~}(4x) for any bipartite g.
SepResult gamma_b_interior(const Graph& g, const Limits& limits = default_limits());

/// Lattice-point counting. Requires g bipartite, so that h* is palindromic.
SepResult gamma_b_ehrhart(const Graph& g, const Limits& limits = default_limits());

/// Formula for bipartite cacti, interior polynomial for other bipartite graphs.
SepResult gamma_b_auto(const Graph& g, const Limits& limits = default_limits());

// ---------------------------------------------------------------------------
// Closed forms

struct ClosedForm {
    IntPoly gamma;
    Int volume;
};

/// Suspension of C_n (the wheel): gamma by the formula, volume by the integer
/// recurrence a_n = 2a_{n-1} + 2a_{n-2}, a_0 = a_1 = 2, minus 2 for even n.
ClosedForm wheel_closed_form(int n);

/// B of C_n for even n: gamma by the formula, volume by b_n = 2b_{n-1} + 4b_{n-2},
/// b_0 = b_1 = 2, minus 2^n.
ClosedForm cycle_b_closed_form(int n);

/// sum_{i <= (n-1)/2} C(2i,i) x^i, the gamma-polynomial of A of the n-cycle itself.
IntPoly gamma_a_cycle_reference(int n);

} // namespace sep
