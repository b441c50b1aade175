#include "sep/ehrhart.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "sep/errors.hpp"

namespace sep {

namespace {

using Matrix = std::vector<std::vector<Int>>;

std::int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p()) throw BoundExceeded("coordinate " + v.get_str() + " does not fit in 64 bits");
    return v.get_si();
}

// Fraction-free determinant of a square matrix.
Int bareiss_det(Matrix a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Integer column operations on d (rows x cols) bringing it to lower echelon form
// with `rank` pivot columns on the left; the same operations are applied to v.
int column_echelon(Matrix& d, Matrix& v) {
    std::size_t cols = v.size();
    std::size_t col = 0;
    for (std::size_t row = 0; row < d.size() && col < cols; ++row) {
        for (std::size_t j = col + 1; j < cols; ++j) {
            if (d[row][j] == 0) continue;
            // Replace columns (col, j) by a unimodular combination leaving gcd in col and 0 in j.
            Int a = d[row][col], b = d[row][j], g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int ag = a / g, bg = b / g;
            auto combine = [&](Matrix& m) {
                for (auto& r : m) {
                    Int x = r[col], y = r[j];
                    r[col] = s * x + t * y;
                    r[j] = -bg * x + ag * y;
                }
            };
            combine(d);
            combine(v);
        }
        if (d[row][col] != 0) {
            if (d[row][col] < 0)
                for (auto* m : {&d, &v})
                    for (auto& r : *m) r[col] = -r[col];
            ++col;
        }
    }
    return static_cast<int>(col);
}

} // namespace

std::optional<Point> LatticePolytope::to_reduced(const Point& x) const {
    if (static_cast<int>(x.size()) != ambient_dim) throw PreconditionError("point has wrong dimension");
    std::vector<Int> coords(static_cast<std::size_t>(ambient_dim), Int(0));
    for (int i = 0; i < ambient_dim; ++i) {
        Int diff = Int(static_cast<long>(x[static_cast<std::size_t>(i)] - base[static_cast<std::size_t>(i)]));
        if (diff == 0) continue;
        for (int j = 0; j < ambient_dim; ++j)
            coords[static_cast<std::size_t>(j)] += diff * coordinate_map[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    for (int j = dim; j < ambient_dim; ++j)
        if (coords[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    Point out;
    for (int j = 0; j < dim; ++j) out.push_back(to_i64(coords[static_cast<std::size_t>(j)]));
    return out;
}

LatticePolytope make_polytope(int ambient_dim, std::vector<Point> points) {
    if (points.empty()) throw PreconditionError("polytope needs at least one point");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != ambient_dim) throw PreconditionError("point has wrong dimension");
    LatticePolytope poly;
    poly.ambient_dim = ambient_dim;
    poly.points = std::move(points);
    poly.base = poly.points.front();

    auto n = static_cast<std::size_t>(ambient_dim);
    Matrix diffs;
    for (const auto& p : poly.points) {
        std::vector<Int> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = Int(static_cast<long>(p[i] - poly.base[i]));
        diffs.push_back(std::move(row));
    }
    Matrix v(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;
    poly.dim = column_echelon(diffs, v);
    poly.coordinate_map = v;

    // Rows of V^-1: the first dim of them span the hull lattice. V is unimodular,
    // so the inverse is integral; solve V W = I column by column over Q.
    std::vector<std::vector<Rat>> q(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) q[i][j] = v[i][j];
        q[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (q[piv][c] == 0) ++piv;
        std::swap(q[piv], q[c]);
        Rat inv = Rat(1) / q[c][c];
        for (auto& x : q[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || q[r][c] == 0) continue;
            Rat f = q[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) q[r][k] -= f * q[c][k];
        }
    }
    for (int r = 0; r < poly.dim; ++r) {
        std::vector<Int> basis_row(n);
        for (std::size_t k = 0; k < n; ++k) {
            const Rat& x = q[static_cast<std::size_t>(r)][n + k];
            if (x.get_den() != 1) throw VerificationError("lattice basis change is not unimodular");
            basis_row[k] = x.get_num();
        }
        poly.lattice_basis.push_back(std::move(basis_row));
    }

    for (const auto& p : poly.points) {
        auto r = poly.to_reduced(p);
        if (!r) throw VerificationError("point left its own affine hull");
        poly.reduced.push_back(std::move(*r));
    }
    return poly;
}

LatticePolytope build_a(const Graph& g) {
    if (g.size() == 0) throw PreconditionError("type A polytope needs at least one edge");
    std::vector<Point> pts;
    auto n = static_cast<std::size_t>(g.order());
    for (const auto& e : g.edges()) {
        Point p(n, 0);
        p[static_cast<std::size_t>(e.u - 1)] = 1;
        p[static_cast<std::size_t>(e.v - 1)] = -1;
        pts.push_back(p);
        for (auto& x : p) x = -x;
        pts.push_back(p);
    }
    return make_polytope(g.order(), std::move(pts));
}

LatticePolytope build_b(const Graph& g) {
    auto n = static_cast<std::size_t>(g.order());
    if (n == 0) throw PreconditionError("type B polytope needs at least one vertex");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            Point p(n, 0);
            p[i] = s;
            pts.push_back(p);
        }
    for (const auto& e : g.edges())
        for (int s : {1, -1})
            for (int t : {1, -1}) {
                Point p(n, 0);
                p[static_cast<std::size_t>(e.u - 1)] = s;
                p[static_cast<std::size_t>(e.v - 1)] = t;
                pts.push_back(p);
            }
    return make_polytope(g.order(), std::move(pts));
}

LatticePolytope reduce_to_full_dim(const LatticePolytope& p) {
    return make_polytope(p.dim, p.reduced);
}

std::vector<Facet> h_representation(const LatticePolytope& p, const Limits& limits) {
    if (p.dim > limits.max_hrep_dim)
        throw BoundExceeded("facet enumeration in dimension " + std::to_string(p.dim) + " exceeds bound " +
                            std::to_string(limits.max_hrep_dim));
    std::set<Point> unique(p.reduced.begin(), p.reduced.end());
    std::vector<Point> pts(unique.begin(), unique.end());
    if (pts.size() > limits.max_hrep_points)
        throw BoundExceeded("facet enumeration over " + std::to_string(pts.size()) + " points exceeds bound " +
                            std::to_string(limits.max_hrep_points));
    auto d = static_cast<std::size_t>(p.dim);
    if (d == 0) return {};

    std::set<Facet> facets;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        // Normal to the hyperplane through the picked points: signed maximal minors
        // of the (d-1) x d difference matrix.
        Matrix diff;
        for (std::size_t i = 1; i < d; ++i) {
            std::vector<Int> row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = Int(static_cast<long>(pts[pick[i]][k] - pts[pick[0]][k]));
            diff.push_back(std::move(row));
        }
        std::vector<Int> normal(d);
        bool nonzero = false;
        for (std::size_t k = 0; k < d; ++k) {
            Matrix minor;
            for (const auto& row : diff) {
                std::vector<Int> r;
                for (std::size_t c = 0; c < d; ++c)
                    if (c != k) r.push_back(row[c]);
                minor.push_back(std::move(r));
            }
            normal[k] = bareiss_det(std::move(minor));
            if (k % 2 == 1) normal[k] = -normal[k];
            if (normal[k] != 0) nonzero = true;
        }
        if (nonzero) {
            Int g = 0;
            for (const auto& c : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            for (auto& c : normal) c /= g;
            auto dot = [&](const Point& x) {
                Int s = 0;
                for (std::size_t k = 0; k < d; ++k) s += normal[k] * Int(static_cast<long>(x[k]));
                return s;
            };
            Int offset = dot(pts[pick[0]]);
            bool above = false, below = false;
            for (const auto& x : pts) {
                Int v = dot(x);
                if (v > offset) above = true;
                if (v < offset) below = true;
            }
            if (!(above && below)) {
                if (above) {
                    for (auto& c : normal) c = -c;
                    offset = -offset;
                }
                facets.insert(Facet{normal, offset});
            }
        }
        std::size_t i = d;
        while (i > 0 && pick[i - 1] == pts.size() - d + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {facets.begin(), facets.end()};
}

Int count_points(const LatticePolytope& p, int t, const Limits& limits) {
    if (t < 0) throw PreconditionError("dilate must be nonnegative");
    if (t == 0) return 1;
    std::vector<Facet> facets = p.hrep.empty() ? h_representation(p, limits) : p.hrep;
    auto d = static_cast<std::size_t>(p.dim);
    if (d == 0) return 1;

    Point lo(d, std::numeric_limits<std::int64_t>::max()), hi(d, std::numeric_limits<std::int64_t>::min());
    for (const auto& x : p.reduced)
        for (std::size_t k = 0; k < d; ++k) {
            lo[k] = std::min(lo[k], x[k] * t);
            hi[k] = std::max(hi[k], x[k] * t);
        }
    Int box = 1;
    for (std::size_t k = 0; k < d; ++k) box *= Int(static_cast<long>(hi[k] - lo[k] + 1));
    if (box > Int(static_cast<unsigned long>(limits.max_box_points)))
        throw BoundExceeded("box scan of " + box.get_str() + " points exceeds bound " + std::to_string(limits.max_box_points));

    std::vector<std::vector<std::int64_t>> normals;
    std::vector<std::int64_t> offsets;
    for (const auto& f : facets) {
        std::vector<std::int64_t> nrm;
        for (const auto& c : f.normal) nrm.push_back(to_i64(c));
        normals.push_back(std::move(nrm));
        offsets.push_back(to_i64(f.offset * t));
    }

    std::int64_t count = 0;
    Point y = lo;
    while (true) {
        bool inside = true;
        for (std::size_t f = 0; f < normals.size() && inside; ++f) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < d; ++k) s += normals[f][k] * y[k];
            inside = s <= offsets[f];
        }
        if (inside) ++count;
        std::size_t k = 0;
        while (k < d && y[k] == hi[k]) y[k] = lo[k], ++k;
        if (k == d) break;
        ++y[k];
    }
    return Int(static_cast<long>(count));
}

IntPoly hstar_from_counts(const std::vector<Int>& counts, int d) {
    if (d < 0 || counts.size() != static_cast<std::size_t>(d) + 2) throw PreconditionError("need counts L(0..d+1)");
    if (counts[0] != 1) throw PreconditionError("L(0) must be 1");
    std::vector<Int> h(static_cast<std::size_t>(d) + 2, Int(0));
    for (int k = 0; k <= d + 1; ++k)
        for (int j = 0; j <= k; ++j) {
            Int term = binomial(static_cast<unsigned long>(d + 1), static_cast<unsigned long>(j)) * counts[static_cast<std::size_t>(k - j)];
            h[static_cast<std::size_t>(k)] += (j % 2 == 0) ? term : Int(-term);
        }
    if (h.back() != 0) throw VerificationError("counts are not those of a degree-" + std::to_string(d) + " Ehrhart polynomial");
    h.pop_back();
    for (const auto& c : h)
        if (c < 0) throw VerificationError("negative h* coefficient " + c.get_str());
    return IntPoly(std::move(h));
}

EhrhartData ehrhart(LatticePolytope p, const Limits& limits) {
    if (p.hrep.empty()) p.hrep = h_representation(p, limits);
    EhrhartData data;
    data.dim = p.dim;
    for (int t = 0; t <= p.dim + 1; ++t) data.counts.push_back(count_points(p, t, limits));
    data.hstar = hstar_from_counts(data.counts, p.dim);
    return data;
}

bool reflexivity_check(const IntPoly& hstar, int d) { return hstar.degree() == d && is_palindromic(hstar); }

} // namespace sep
