#include "sep/matching.hpp"

#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "sep/errors.hpp"

namespace sep {

namespace {

// g(G[S], x) by branching on the lowest non-isolated vertex v of S:
// either v is unmatched, or it is matched to one of its neighbours in S.
class MatchingCounter {
public:
    explicit MatchingCounter(const Graph& g) : nb_(g.neighbor_masks()) {}

    IntPoly count(VertexMask s) {
        s = strip_isolated(s);
        if (s == 0) return IntPoly{1};
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        int v = std::countr_zero(s) + 1;
        VertexMask rest = s & ~vertex_bit(v);
        IntPoly with_v;
        for (VertexMask partners = nb_[static_cast<std::size_t>(v - 1)] & s; partners; partners &= partners - 1) {
            int u = std::countr_zero(partners) + 1;
            with_v += count(rest & ~vertex_bit(u));
        }
        IntPoly result = count(rest) + with_v.shift(1);
        memo_.emplace(s, result);
        return result;
    }

private:
    VertexMask strip_isolated(VertexMask s) const {
        VertexMask keep = 0;
        for (VertexMask it = s; it; it &= it - 1) {
            int v = std::countr_zero(it);
            if (nb_[static_cast<std::size_t>(v)] & s) keep |= VertexMask{1} << v;
        }
        return keep;
    }

    std::vector<VertexMask> nb_;
    std::unordered_map<VertexMask, IntPoly> memo_;
};

std::vector<Int> trimmed(const IntPoly& p) {
    std::vector<Int> v = p.coeffs();
    if (v.empty()) v.emplace_back(0);
    return v;
}

} // namespace

IntPoly matching_generating_poly(const Graph& g) {
    if (g.order() == 0) return IntPoly{1};
    MatchingCounter counter(g);
    return counter.count(g.all_vertices_mask());
}

std::vector<Int> matching_counts(const Graph& g) { return trimmed(matching_generating_poly(g)); }

IntPoly matching_poly(const Graph& g) {
    auto m = matching_counts(g);
    int n = g.order();
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
    for (std::size_t k = 0; k < m.size(); ++k) {
        Int term = (k % 2 == 0) ? m[k] : Int(-m[k]);
        coeffs[static_cast<std::size_t>(n) - 2 * k] = term;
    }
    return IntPoly(std::move(coeffs));
}

std::vector<Int> matched_vertex_sets(const Graph& g, const Limits& limits) {
    if (g.order() > limits.max_matching_vertices)
        throw BoundExceeded("matched vertex set enumeration over " + std::to_string(g.order()) +
                            " vertices exceeds bound " + std::to_string(limits.max_matching_vertices));
    // Grow the family of matched vertex sets one edge at a time; every matching
    // is reached by adding its edges in edge order, and sets are deduplicated as they appear.
    std::unordered_set<VertexMask> sets{0};
    std::vector<VertexMask> fresh;
    for (const auto& e : g.edges()) {
        VertexMask both = vertex_bit(e.u) | vertex_bit(e.v);
        fresh.clear();
        for (VertexMask s : sets)
            if (!(s & both)) fresh.push_back(s | both);
        sets.insert(fresh.begin(), fresh.end());
    }
    std::vector<Int> mv(static_cast<std::size_t>(g.order()) / 2 + 1, Int(0));
    for (VertexMask s : sets) mv[static_cast<std::size_t>(std::popcount(s)) / 2] += 1;
    while (mv.size() > 1 && mv.back() == 0) mv.pop_back();
    return mv;
}

std::vector<Int> matched_vertex_sets_formula(const Graph& g, const Limits& limits) {
    if (!classify(g, limits).unique_even_cycle_condition)
        throw PreconditionError("matched vertex set formula needs every edge on at most one even cycle");
    auto base = matching_counts(g);
    std::vector<Int> mv(static_cast<std::size_t>(g.order()) / 2 + 1, Int(0));
    for (std::size_t k = 0; k < base.size(); ++k) mv[k] += base[k];
    for (const auto& family : even_cycle_families(g, limits)) {
        auto rest = matching_counts(delete_vertex_set(g, family.mask).graph);
        std::size_t offset = static_cast<std::size_t>(family.edge_count() / 2);
        Int sign = family.count() % 2 == 0 ? 1 : -1;
        for (std::size_t j = 0; j < rest.size() && j + offset < mv.size(); ++j) mv[j + offset] += sign * rest[j];
    }
    while (mv.size() > 1 && mv.back() == 0) mv.pop_back();
    return mv;
}

MatchingProfile matching_profile(const Graph& g, const Limits& limits) {
    return MatchingProfile{matching_counts(g), matched_vertex_sets(g, limits)};
}

namespace {

class IndependenceCounter {
public:
    explicit IndependenceCounter(const Graph& g) : nb_(g.neighbor_masks()) {}

    IntPoly count(VertexMask s) {
        if (s == 0) return IntPoly{1};
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        int best = -1, best_deg = -1;
        for (VertexMask it = s; it; it &= it - 1) {
            int v = std::countr_zero(it);
            int d = std::popcount(nb_[static_cast<std::size_t>(v)] & s);
            if (d > best_deg) best = v, best_deg = d;
        }
        IntPoly result;
        if (best_deg == 0) {
            result = one_plus_x_pow(std::popcount(s));
        } else {
            VertexMask bit = VertexMask{1} << best;
            result = count(s & ~bit) + count(s & ~bit & ~nb_[static_cast<std::size_t>(best)]).shift(1);
        }
        memo_.emplace(s, result);
        return result;
    }

private:
    std::vector<VertexMask> nb_;
    std::unordered_map<VertexMask, IntPoly> memo_;
};

} // namespace

IntPoly independence_poly(const Graph& g, const Limits& limits) {
    if (g.order() > limits.max_independence_vertices)
        throw BoundExceeded("independence polynomial over " + std::to_string(g.order()) + " vertices exceeds bound " +
                            std::to_string(limits.max_independence_vertices));
    if (g.order() == 0) return IntPoly{1};
    IndependenceCounter counter(g);
    return counter.count(g.all_vertices_mask());
}

} // namespace sep
