#include "sep/spectral.hpp"

#include "sep/errors.hpp"
#include "sep/matching.hpp"

namespace sep {

MuParams uniform_weights(const Graph& g, const Rat& t, const Limits& limits) {
    MuParams params;
    for (const auto& c : simple_cycles(g, limits)) params.emplace(c.vertices, t);
    return params;
}

RatPoly mu_poly(const Graph& g, const MuParams& params, const Limits& limits) {
    RatPoly mu = to_rat(matching_poly(g));
    for (const auto& family : all_cycle_families(g, limits)) {
        Rat weight = family.count() % 2 == 0 ? 1 : -1;
        for (int i = 0; i < family.count(); ++i) weight *= 2;
        for (const auto& c : family.cycles) {
            auto it = params.find(c.vertices);
            if (it == params.end()) throw PreconditionError("no weight for a cycle of length " + std::to_string(c.length()));
            weight *= it->second;
        }
        if (weight == 0) continue;
        mu += to_rat(matching_poly(delete_vertex_set(g, family.mask).graph)) * weight;
    }
    return mu;
}

IntPoly char_poly_adjacency(const Graph& g) {
    auto n = static_cast<std::size_t>(g.order());
    if (n == 0) return IntPoly{1};
    using Matrix = std::vector<std::vector<Int>>;
    Matrix a(n, std::vector<Int>(n, Int(0)));
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] = 1;
        a[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)] = 1;
    }
    auto mul = [&](const Matrix& x, const Matrix& y) {
        Matrix z(n, std::vector<Int>(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (x[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
            }
        return z;
    };
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    Matrix m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        m = mul(a, m);
        for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        Matrix am = mul(a, m);
        Int trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
        if (trace % Int(static_cast<long>(k)) != 0) throw VerificationError("Faddeev-LeVerrier trace not divisible");
        c[n - k] = -trace / Int(static_cast<long>(k));
    }
    return IntPoly(std::move(c));
}

MuParams bridge_weights(const Graph& g, const Limits& limits) {
    MuParams params;
    for (const auto& c : simple_cycles(g, limits)) {
        Rat t = 0;
        if (c.even()) {
            t = 1;
            for (int i = 0; i < c.length() / 2; ++i) t *= Rat(-1, 2);
        }
        params.emplace(c.vertices, t);
    }
    return params;
}

bool verify_gamma_mu_bridge(const Graph& g, const std::vector<Rat>& samples, const Limits& limits) {
    if (!classify(g, limits).cactus) throw PreconditionError("bridge identity needs a cactus");
    for (const auto& q : samples)
        if (q == 0) throw PreconditionError("bridge sample points must be nonzero");

    // gamma(G,x) = g(G,2x) + sum_R (-2)^c(R) g(G-R,2x) x^(|E(R)|/2)
    RatPoly gamma = to_rat(matching_generating_poly(g).scale_arg(Int(2)));
    for (const auto& family : even_cycle_families(g, limits)) {
        Rat weight = 1;
        for (int i = 0; i < family.count(); ++i) weight *= -2;
        RatPoly rest = to_rat(matching_generating_poly(delete_vertex_set(g, family.mask).graph).scale_arg(Int(2)));
        gamma += (rest * weight).shift(static_cast<std::size_t>(family.edge_count() / 2));
    }
    RatPoly mu = mu_poly(g, bridge_weights(g, limits), limits);

    for (const auto& q : samples) {
        Rat qn = 1;
        for (int i = 0; i < g.order(); ++i) qn *= q;
        Rat lhs = qn * gamma.evaluate(Rat(Rat(-1) / (2 * q * q)));
        if (lhs != mu.evaluate(q)) return false;
    }
    return true;
}

std::vector<Rat> default_bridge_samples(const Graph& g) {
    std::vector<Rat> out;
    for (int i = 1; i <= g.order() + 1; ++i) out.emplace_back(i);
    return out;
}

} // namespace sep
