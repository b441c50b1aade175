#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sep/graph.hpp"
#include "sep/poly.hpp"

namespace sep {

using Point = std::vector<std::int64_t>;

/// normal . y <= offset, in reduced coordinates. Normals are primitive.
struct Facet {
    std::vector<Int> normal;
    Int offset;

    friend bool operator==(const Facet&, const Facet&) = default;
    friend bool operator<(const Facet& a, const Facet& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    }
};

/// Lattice polytope given by points (not necessarily vertices). make_polytope
/// fills in the affine hull data: `base` is points[0], `lattice_basis` holds dim
/// integer vectors spanning Z^ambient ∩ (aff hull - base), and `reduced` holds the
/// coordinates of each point relative to base in that basis.
struct LatticePolytope {
    int ambient_dim = 0;
    std::vector<Point> points;
    int dim = 0;
    Point base;
    std::vector<std::vector<Int>> lattice_basis;
    std::vector<Point> reduced;
    std::vector<Facet> hrep;

    /// Reduced coordinates of an ambient lattice point, or nullopt when it is off
    /// the affine-hull lattice through base.
    std::optional<Point> to_reduced(const Point& x) const;
    /// Unimodular ambient_dim x ambient_dim matrix V: reduced(x) is the first dim
    /// entries of (x - base) V, and the remaining entries vanish on the hull.
    std::vector<std::vector<Int>> coordinate_map;
};

LatticePolytope make_polytope(int ambient_dim, std::vector<Point> points);

/// conv{±(e_i - e_j) : ij in E}. Requires at least one edge.
LatticePolytope build_a(const Graph& g);

/// conv({±e_i} ∪ {±e_i ± e_j : ij in E}).
LatticePolytope build_b(const Graph& g);

/// The same polytope written in its reduced coordinates (full-dimensional in Z^dim).
LatticePolytope reduce_to_full_dim(const LatticePolytope& p);

/// Facets of the reduced polytope, sorted. Brute force over affinely independent
/// point subsets, so bounded by limits.max_hrep_dim and limits.max_hrep_points.
std::vector<Facet> h_representation(const LatticePolytope& p, const Limits& limits = default_limits());

/// |tP ∩ Z^ambient| by a box scan in reduced coordinates. Uses p.hrep, computing
/// it first when empty.
Int count_points(const LatticePolytope& p, int t, const Limits& limits = default_limits());

/// h*_k = sum_j (-1)^j C(d+1,j) L(k-j). Throws VerificationError on a negative
/// coefficient or when the degree d+1 term does not vanish.
IntPoly hstar_from_counts(const std::vector<Int>& counts, int d);

struct EhrhartData {
    int dim = 0;
    std::vector<Int> counts; // L(0..dim+1)
    IntPoly hstar;
};

EhrhartData ehrhart(LatticePolytope p, const Limits& limits = default_limits());

/// True iff hstar is palindromic of degree exactly d.
bool reflexivity_check(const IntPoly& hstar, int d);

} // namespace sep
