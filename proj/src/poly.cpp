#include "sep/poly.hpp"

#include <cctype>
#include <sstream>

namespace sep {

RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return RatPoly(std::move(v));
}

IntPoly to_int(const RatPoly& p) {
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw VerificationError("non-integral coefficient " + c.get_str());
        v.emplace_back(c.get_num());
    }
    return IntPoly(std::move(v));
}

IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return {};
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, Int(c.get_den()));
    std::vector<Int> v;
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        Int a = c.get_num() * (den / c.get_den());
        g = gcd(g, a);
        v.push_back(a);
    }
    for (auto& a : v) a /= g;
    return IntPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + db)] / b.leading();
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rat lc = a.leading();
    return a * Rat(1 / lc);
}

IntPoly parse_poly(const std::string& text) {
    std::string body = text;
    for (char& c : body)
        if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<Int> v;
    std::string tok;
    while (in >> tok) {
        Int a;
        if (a.set_str(tok, 10) != 0) throw ParseError("bad coefficient '" + tok + "'");
        v.push_back(a);
    }
    return IntPoly(std::move(v));
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

IntPoly one_plus_x_pow(int n) {
    std::vector<Int> v;
    for (int k = 0; k <= n; ++k) v.push_back(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    return IntPoly(std::move(v));
}

IntPoly gamma_to_hstar(const IntPoly& gamma, int d) {
    if (d < 0 || gamma.degree() > d / 2)
        throw PreconditionError("gamma degree " + std::to_string(gamma.degree()) + " exceeds floor(" +
                                std::to_string(d) + "/2)");
    IntPoly h;
    for (int i = 0; i <= gamma.degree(); ++i) {
        if (gamma.coeff(i) == 0) continue;
        h += (one_plus_x_pow(d - 2 * i) * gamma.coeff(i)).shift(static_cast<std::size_t>(i));
    }
    return h;
}

IntPoly hstar_to_gamma(const IntPoly& hstar) {
    if (!is_palindromic(hstar)) throw PreconditionError("h* polynomial " + hstar.to_string() + " is not palindromic");
    int d = hstar.degree();
    IntPoly rest = hstar;
    std::vector<Int> gamma;
    for (int i = 0; i <= d / 2; ++i) {
        Int g = rest.coeff(i);
        gamma.push_back(g);
        if (g != 0) rest -= (one_plus_x_pow(d - 2 * i) * g).shift(static_cast<std::size_t>(i));
    }
    if (!rest.is_zero()) throw VerificationError("gamma expansion left remainder " + rest.to_string());
    return IntPoly(std::move(gamma));
}

bool is_palindromic(const IntPoly& f) {
    if (f.is_zero()) return false;
    int d = f.degree();
    for (int i = 0; i <= d / 2; ++i)
        if (f.coeff(i) != f.coeff(d - i)) return false;
    return true;
}

bool is_unimodal(const IntPoly& f) {
    bool descending = false;
    for (int i = 1; i <= f.degree(); ++i) {
        int c = cmp(f.coeff(i), f.coeff(i - 1));
        if (c < 0) descending = true;
        else if (c > 0 && descending) return false;
    }
    return true;
}

bool is_log_concave(const IntPoly& f) {
    for (int i = 1; i < f.degree(); ++i)
        if (f.coeff(i) * f.coeff(i) < f.coeff(i - 1) * f.coeff(i + 1)) return false;
    return true;
}

bool all_coefficients_positive(const IntPoly& f) {
    if (f.is_zero()) return false;
    for (const auto& c : f.coeffs())
        if (c <= 0) return false;
    return true;
}

namespace {

int sign_at_infinity(const IntPoly& p, bool negative_side) {
    int s = sgn(p.leading());
    if (negative_side && p.degree() % 2 == 1) s = -s;
    return s;
}

int sign_changes(const std::vector<IntPoly>& chain, bool negative_side) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at_infinity(p, negative_side);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int count_distinct_real_roots(const RatPoly& f) {
    if (f.is_zero()) throw PreconditionError("real roots of the zero polynomial");
    RatPoly sqfree = divmod(f, gcd(f, f.derivative())).first;
    // Positive rescaling of each chain member keeps the signs and the numbers small.
    std::vector<IntPoly> chain{primitive_part(sqfree)};
    RatPoly cur = sqfree.derivative();
    while (!cur.is_zero()) {
        chain.push_back(primitive_part(cur));
        cur = -divmod(to_rat(chain[chain.size() - 2]), to_rat(chain.back())).second;
    }
    return sign_changes(chain, true) - sign_changes(chain, false);
}

RealRootInfo real_roots(const RatPoly& f) {
    if (f.is_zero()) throw PreconditionError("real roots of the zero polynomial");
    RealRootInfo info;
    RatPoly sqfree = divmod(f, gcd(f, f.derivative())).first;
    info.squarefree_degree = sqfree.degree();
    info.distinct_real_roots = count_distinct_real_roots(sqfree);
    info.real_rooted = info.distinct_real_roots == info.squarefree_degree;
    return info;
}

RealRootInfo real_roots(const IntPoly& f) { return real_roots(to_rat(f)); }

PropertyReport check_properties(const IntPoly& f) {
    PropertyReport r;
    r.degree = f.degree();
    r.palindromic = is_palindromic(f);
    r.unimodal = is_unimodal(f);
    r.log_concave = is_log_concave(f);
    if (r.palindromic) {
        r.gamma = hstar_to_gamma(f);
        r.gamma_positive = std::all_of(r.gamma->coeffs().begin(), r.gamma->coeffs().end(),
                                       [](const Int& c) { return c >= 0; });
    }
    if (!f.is_zero()) {
        RealRootInfo info = real_roots(f);
        r.real_rooted = info.real_rooted;
        r.real_root_count = info.distinct_real_roots;
    }
    return r;
}

} // namespace sep
