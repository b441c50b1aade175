#include "sep/gamma.hpp"

#include "sep/ehrhart.hpp"
#include "sep/errors.hpp"
#include "sep/interior.hpp"
#include "sep/matching.hpp"

namespace sep {

std::string method_name(Method m) {
    switch (m) {
    case Method::formula: return "formula";
    case Method::cut_sum: return "cut_sum";
    case Method::interior: return "interior";
    case Method::ehrhart: return "ehrhart";
    }
    return "unknown";
}

namespace {

Int pow2(int e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

void check_volume(const SepResult& r) {
    Rat expected = Rat(pow2(r.dim)) * r.gamma.evaluate(Rat(1, 4));
    Int at_one = r.hstar.evaluate(Int(1));
    if (expected != Rat(at_one) || at_one != r.volume)
        throw VerificationError("volume mismatch: h*(1) = " + at_one.get_str() + ", 2^d gamma(1/4) = " + expected.get_str());
}

// g(G,ax) + sum_R s^c(R) g(G-R,ax) (bx)^(|E(R)|/2)
IntPoly cycle_family_formula(const Graph& g, const Int& a, const Int& s, const Int& b, const Limits& limits) {
    IntPoly gamma = matching_generating_poly(g).scale_arg(a);
    for (const auto& family : even_cycle_families(g, limits)) {
        int half = family.edge_count() / 2;
        Int weight = 1;
        for (int i = 0; i < family.count(); ++i) weight *= s;
        for (int i = 0; i < half; ++i) weight *= b;
        IntPoly rest = matching_generating_poly(delete_vertex_set(g, family.mask).graph).scale_arg(a);
        gamma += (rest * weight).shift(static_cast<std::size_t>(half));
    }
    return gamma;
}

Bipartition require_bipartition(const Graph& g) {
    auto b = two_coloring(g);
    if (!b) throw PreconditionError("graph is not bipartite");
    return *b;
}

} // namespace

SepResult result_from_gamma(IntPoly gamma, int dim, Method method) {
    SepResult r;
    r.hstar = gamma_to_hstar(gamma, dim);
    r.gamma = std::move(gamma);
    r.volume = r.hstar.evaluate(Int(1));
    r.dim = dim;
    r.method = method;
    check_volume(r);
    return r;
}

SepResult result_from_hstar(IntPoly hstar, int dim, Method method) {
    if (!reflexivity_check(hstar, dim))
        throw VerificationError("h* " + hstar.to_string() + " is not palindromic of degree " + std::to_string(dim));
    SepResult r;
    r.gamma = hstar_to_gamma(hstar);
    r.hstar = std::move(hstar);
    r.volume = r.hstar.evaluate(Int(1));
    r.dim = dim;
    r.method = method;
    check_volume(r);
    return r;
}

SepResult gamma_a_suspension(const Graph& g, const Limits& limits) {
    if (!classify(g, limits).unique_even_cycle_condition)
        throw PreconditionError("formula needs every edge on at most one even cycle");
    return result_from_gamma(cycle_family_formula(g, Int(2), Int(-2), Int(1), limits), g.order(), Method::formula);
}

SepResult gamma_a_suspension_noeven(const Graph& g, const Limits& limits) {
    if (classify(g, limits).has_even_cycle) throw PreconditionError("graph has an even cycle");
    return result_from_gamma(matching_generating_poly(g).scale_arg(Int(2)), g.order(), Method::formula);
}

SepResult gamma_a_cut_sum(const Graph& g, const Limits& limits, int jobs) {
    return result_from_gamma(cut_sum_gamma(g, limits, jobs), g.order(), Method::cut_sum);
}

SepResult gamma_a_ehrhart(const Graph& g, const Limits& limits) {
    auto data = ehrhart(build_a(suspension(g)), limits);
    if (data.dim != g.order())
        throw VerificationError("suspension polytope has dimension " + std::to_string(data.dim) + ", expected " +
                                std::to_string(g.order()));
    return result_from_hstar(data.hstar, data.dim, Method::ehrhart);
}

SepResult gamma_a_auto(const Graph& g, const Limits& limits, int jobs) {
    if (classify(g, limits).unique_even_cycle_condition) return gamma_a_suspension(g, limits);
    return gamma_a_cut_sum(g, limits, jobs);
}

SepResult gamma_b(const Graph& g, const Limits& limits) {
    auto c = classify(g, limits);
    if (!c.bipartite) throw PreconditionError("type B formula needs a bipartite graph");
    if (!c.cactus) throw PreconditionError("type B formula needs a cactus");
    return result_from_gamma(cycle_family_formula(g, Int(4), Int(-1), Int(4), limits), g.order(), Method::formula);
}

SepResult gamma_b_interior(const Graph& g, const Limits& limits) {
    Bipartition b = require_bipartition(g);
    return result_from_gamma(interior_tilde_fast(g, b, limits).scale_arg(Int(4)), g.order(), Method::interior);
}

SepResult gamma_b_ehrhart(const Graph& g, const Limits& limits) {
    require_bipartition(g);
    auto data = ehrhart(build_b(g), limits);
    if (data.dim != g.order())
        throw VerificationError("type B polytope is not full-dimensional");
    return result_from_hstar(data.hstar, data.dim, Method::ehrhart);
}

SepResult gamma_b_auto(const Graph& g, const Limits& limits) {
    auto c = classify(g, limits);
    if (c.bipartite && c.cactus) return gamma_b(g, limits);
    return gamma_b_interior(g, limits);
}

ClosedForm wheel_closed_form(int n) {
    if (n < 3) throw PreconditionError("wheel needs n >= 3");
    Int prev = 2, cur = 2;
    for (int i = 2; i <= n; ++i) {
        Int next = 2 * cur + 2 * prev;
        prev = cur;
        cur = next;
    }
    if (n % 2 == 0) cur -= 2;
    return {gamma_a_suspension(families::cycle(n)).gamma, cur};
}

ClosedForm cycle_b_closed_form(int n) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("type B cycle closed form needs even n >= 4");
    Int prev = 2, cur = 2;
    for (int i = 2; i <= n; ++i) {
        Int next = 2 * cur + 4 * prev;
        prev = cur;
        cur = next;
    }
    return {gamma_b(families::cycle(n)).gamma, cur - pow2(n)};
}

IntPoly gamma_a_cycle_reference(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<Int> coeffs;
    for (int i = 0; i <= (n - 1) / 2; ++i) coeffs.push_back(binomial(static_cast<unsigned long>(2 * i), static_cast<unsigned long>(i)));
    return IntPoly(std::move(coeffs));
}

} // namespace sep
