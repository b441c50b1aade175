#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sep/errors.hpp"

namespace sep {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial with exact coefficients, index = degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

    static Polynomial monomial(const T& c, std::size_t degree) {
        std::vector<T> v(degree + 1, T(0));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    T coeff(int k) const {
        if (k < 0 || k > degree()) return T(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }
    const T& leading() const { return coeffs_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& c) {
        for (auto& a : coeffs_) a *= c;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
    friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
    friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// f(x) * x^k
    Polynomial shift(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> v(k, T(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    /// f(m x)
    Polynomial scale_arg(const T& m) const {
        std::vector<T> v = coeffs_;
        T power(1);
        for (auto& a : v) {
            a *= power;
            power *= m;
        }
        return Polynomial(std::move(v));
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(v));
    }

    /// f(g(x)) by Horner's rule.
    Polynomial compose(const Polynomial& g) const {
        Polynomial out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * g + constant(*it);
        return out;
    }

    template <typename U>
    U evaluate(const U& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    /// "[1, 9, 9, 1]"
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ", ";
            s += coeff_string(coeffs_[i]);
        }
        return s + "]";
    }

    /// "1 + 9x + 9x^2 + x^3"
    std::string pretty() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const T& a = coeffs_[i];
            if (a == 0) continue;
            bool negative = a < 0;
            T mag = negative ? T(-a) : a;
            if (s.empty()) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            bool unit = (mag == 1);
            if (i == 0 || !unit) s += coeff_string(mag);
            if (i >= 1) s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    static std::string coeff_string(const T& a) { return a.get_str(); }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    return os << p.to_string();
}

RatPoly to_rat(const IntPoly& p);

/// Exact conversion; throws VerificationError when a coefficient is not integral.
IntPoly to_int(const RatPoly& p);

/// Positive multiple of p with coprime integer coefficients.
IntPoly primitive_part(const RatPoly& p);

/// Polynomial long division over Q. Throws on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd over Q (zero when both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

IntPoly parse_poly(const std::string& text);

Int binomial(unsigned long n, unsigned long k);

/// (1 + x)^n
IntPoly one_plus_x_pow(int n);

// ---------------------------------------------------------------------------
// h* <-> gamma

/// sum_i gamma_i x^i (1+x)^(d-2i). Throws PreconditionError if deg gamma > floor(d/2).
IntPoly gamma_to_hstar(const IntPoly& gamma, int d);

/// Inverse of gamma_to_hstar for a palindromic polynomial of its own degree.
IntPoly hstar_to_gamma(const IntPoly& hstar);

// ---------------------------------------------------------------------------
// Predicates

bool is_palindromic(const IntPoly& f);
bool is_unimodal(const IntPoly& f);
bool is_log_concave(const IntPoly& f);

struct RealRootInfo {
    bool real_rooted = false;
    int distinct_real_roots = 0;
    int squarefree_degree = 0;
};

/// Number of distinct real roots of f by a Sturm chain of its square-free part.
int count_distinct_real_roots(const RatPoly& f);

/// Exact real-rootedness. Throws PreconditionError for the zero polynomial.
RealRootInfo real_roots(const RatPoly& f);
RealRootInfo real_roots(const IntPoly& f);
inline bool is_real_rooted(const IntPoly& f) { return real_roots(f).real_rooted; }

struct PropertyReport {
    int degree = -1;
    bool palindromic = false;
    bool unimodal = false;
    bool log_concave = false;
    bool gamma_positive = false;
    std::optional<IntPoly> gamma;
    bool real_rooted = false;
    int real_root_count = 0;

    /// (RR) => (LC) => (UN), only meaningful when all coefficients are positive.
    bool implications_hold() const { return (!real_rooted || log_concave) && (!log_concave || unimodal); }
};

PropertyReport check_properties(const IntPoly& f);

bool all_coefficients_positive(const IntPoly& f);

inline Rat evaluate_rational(const IntPoly& f, const Rat& q) { return f.evaluate(q); }
inline Rat evaluate_rational(const RatPoly& f, const Rat& q) { return f.evaluate(q); }

} // namespace sep
