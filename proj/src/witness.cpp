#include "sep/witness.hpp"

#include <algorithm>

#include "sep/errors.hpp"
#include "sep/gamma.hpp"
#include "sep/matching.hpp"

namespace sep {

namespace {

class CliqueCounter {
public:
    CliqueCounter(const Graph& g, std::size_t bound) : g_(g), bound_(bound) {}

    std::vector<Int> run() {
        counts_.assign(1, Int(1));
        total_ = 1;
        std::vector<int> all;
        for (int v = 1; v <= g_.order(); ++v) all.push_back(v);
        extend(all, 0);
        return counts_;
    }

private:
    // Every clique is reached once, by adding its vertices in increasing order.
    void extend(const std::vector<int>& candidates, std::size_t size) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            int v = candidates[i];
            if (counts_.size() <= size + 1) counts_.emplace_back(0);
            counts_[size + 1] += 1;
            if (++total_ > bound_) throw BoundExceeded("clique count exceeds bound " + std::to_string(bound_));
            std::vector<int> next;
            const auto& nb = g_.neighbors(v);
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (std::binary_search(nb.begin(), nb.end(), candidates[j])) next.push_back(candidates[j]);
            if (!next.empty()) extend(next, size + 1);
        }
    }

    const Graph& g_;
    std::size_t bound_;
    std::size_t total_ = 0;
    std::vector<Int> counts_;
};

} // namespace

IntPoly clique_f_poly(const Graph& g, const Limits& limits) {
    return IntPoly(CliqueCounter(g, limits.max_cliques).run());
}

FlagWitness flag_witness(const Graph& g, int m, const Limits& limits) {
    if (m < 1) throw PreconditionError("m must be positive");
    FlagWitness w;
    w.m = m;
    w.witness_graph = complement(lex_product_complete(line_graph(g), m));
    w.f_poly = clique_f_poly(w.witness_graph, limits);
    w.target = matching_generating_poly(g).scale_arg(Int(m));
    if (w.f_poly != w.target)
        throw VerificationError("witness f-polynomial " + w.f_poly.to_string() + " differs from " + w.target.to_string());
    return w;
}

FlagWitness witness_a(const Graph& g, const Limits& limits) {
    IntPoly gamma = gamma_a_suspension_noeven(g, limits).gamma;
    FlagWitness w = flag_witness(g, 2, limits);
    if (w.f_poly != gamma) throw VerificationError("type A witness does not match gamma " + gamma.to_string());
    w.target = gamma;
    return w;
}

FlagWitness witness_b(const Graph& g, const Limits& limits) {
    if (!classify(g, limits).forest) throw PreconditionError("type B witness needs a forest");
    IntPoly gamma = gamma_b(g, limits).gamma;
    FlagWitness w = flag_witness(g, 4, limits);
    if (w.f_poly != gamma) throw VerificationError("type B witness does not match gamma " + gamma.to_string());
    w.target = gamma;
    return w;
}

bool lex_composition_check(const Graph& g, const Graph& h, const Limits& limits) {
    IntPoly lhs = independence_poly(lex_product(g, h), limits);
    IntPoly rhs = independence_poly(g, limits).compose(independence_poly(h, limits) - IntPoly{1});
    return lhs == rhs;
}

} // namespace sep
