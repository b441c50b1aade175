#include <gtest/gtest.h>

#include <random>

#include "sep/poly.hpp"

using namespace sep;

namespace {

IntPoly P(std::initializer_list<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

} // namespace

TEST(PolyArithmetic, Basics) {
    EXPECT_EQ(P({1, 1}) * P({1, 1}), P({1, 2, 1}));
    EXPECT_EQ(P({1, 3}).scale_arg(Int(2)), P({1, 6}));
    EXPECT_TRUE((IntPoly{} * P({1, 2, 3})).is_zero());
    EXPECT_EQ(IntPoly{}.degree(), -1);
    EXPECT_EQ(P({0, 0, 0}).degree(), -1);
    EXPECT_EQ(P({1, 2}).shift(2), P({0, 0, 1, 2}));
    EXPECT_EQ(P({1, 2, 1}) - P({1, 2, 1}), IntPoly{});
    EXPECT_EQ(P({1, 0, 1}).compose(P({1, 1})), P({2, 2, 1}));
    EXPECT_EQ(P({5, 3, 1}).derivative(), P({3, 2}));
}

TEST(PolyArithmetic, TextForms) {
    EXPECT_EQ(P({1, 9, 9, 1}).to_string(), "[1, 9, 9, 1]");
    EXPECT_EQ(P({1, 9, 9, 1}).pretty(), "1 + 9x + 9x^2 + x^3");
    EXPECT_EQ(P({0, -1, 0, 2}).pretty(), "-x + 2x^3");
    EXPECT_EQ(IntPoly{}.pretty(), "0");
    EXPECT_EQ(IntPoly{}.to_string(), "[]");
    EXPECT_EQ(parse_poly("[1, 9, 9, 1]"), P({1, 9, 9, 1}));
    EXPECT_EQ(parse_poly("1 2 3"), P({1, 2, 3}));
    EXPECT_THROW(parse_poly("[1, a]"), ParseError);
}

TEST(PolyArithmetic, Division) {
    auto [q, r] = divmod(to_rat(P({-1, 0, 1})), to_rat(P({-1, 1})));
    EXPECT_EQ(q, to_rat(P({1, 1})));
    EXPECT_TRUE(r.is_zero());
    EXPECT_THROW(divmod(to_rat(P({1})), RatPoly{}), PreconditionError);
    EXPECT_EQ(gcd(to_rat(P({1, 2, 1})), to_rat(P({-1, 0, 1}))), to_rat(P({1, 1})));
    EXPECT_EQ(primitive_part(to_rat(P({-2, -4}))), P({-1, -2}));
}

TEST(GammaTransform, Examples) {
    EXPECT_EQ(gamma_to_hstar(P({1, 6}), 3), P({1, 9, 9, 1}));
    EXPECT_EQ(gamma_to_hstar(P({1, 2, 6}), 4), P({1, 6, 16, 6, 1}));
    EXPECT_EQ(gamma_to_hstar(P({1}), 5), one_plus_x_pow(5));
    EXPECT_THROW(gamma_to_hstar(P({1, 1, 1}), 3), PreconditionError);

    EXPECT_EQ(hstar_to_gamma(P({1, 9, 9, 1})), P({1, 6}));
    EXPECT_EQ(hstar_to_gamma(one_plus_x_pow(6)), P({1}));
    EXPECT_EQ(hstar_to_gamma(P({1, 4, 1})), P({1, 2}));
    EXPECT_THROW(hstar_to_gamma(P({1, 2, 3})), PreconditionError);
}

TEST(GammaTransform, RoundTripAndVolumeIdentity) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        int d = 1 + trial % 9;
        std::vector<Int> c;
        for (int i = 0; i <= d / 2; ++i) c.emplace_back(coeff(rng));
        c[0] = 1;
        IntPoly gamma(c);
        IntPoly h = gamma_to_hstar(gamma, d);
        EXPECT_TRUE(is_palindromic(h));
        EXPECT_EQ(h.degree(), d);
        EXPECT_EQ(hstar_to_gamma(h), gamma);
        Int pow = 1;
        for (int i = 0; i < d; ++i) pow *= 2;
        EXPECT_EQ(Rat(h.evaluate(Int(1))), Rat(pow) * gamma.evaluate(Rat(1, 4)));
    }
}

TEST(Predicates, Conventions) {
    EXPECT_TRUE(is_unimodal(IntPoly{}));
    EXPECT_TRUE(is_unimodal(P({5})));
    EXPECT_FALSE(is_palindromic(IntPoly{}));
    EXPECT_TRUE(is_palindromic(P({1, 4, 1})));
    EXPECT_FALSE(is_unimodal(P({1, 1, 0, 1})));
    EXPECT_TRUE(is_log_concave(P({1, 2, 1})));
    EXPECT_FALSE(is_log_concave(P({1, 0, 1})));
}

TEST(RealRoots, Examples) {
    EXPECT_FALSE(is_real_rooted(P({1, 2, 6})));
    EXPECT_EQ(real_roots(P({1, 2, 6})).distinct_real_roots, 0);
    EXPECT_TRUE(is_real_rooted(P({1, 6})));
    auto sq = real_roots(P({1, 2, 1}));
    EXPECT_TRUE(sq.real_rooted);
    EXPECT_EQ(sq.distinct_real_roots, 1);
    EXPECT_EQ(sq.squarefree_degree, 1);
    EXPECT_THROW(real_roots(IntPoly{}), PreconditionError);
    EXPECT_FALSE(is_real_rooted(P({1, 6, 16, 6, 1})));
    EXPECT_TRUE(is_real_rooted(P({1, 9, 9, 1})));
    // x^3 - x, x^4 - 5x^2 + 4, negative leading coefficient
    EXPECT_EQ(count_distinct_real_roots(to_rat(P({0, -1, 0, 1}))), 3);
    EXPECT_EQ(count_distinct_real_roots(to_rat(P({4, 0, -5, 0, 1}))), 4);
    EXPECT_EQ(count_distinct_real_roots(to_rat(P({-4, 0, 5, 0, -1}))), 4);
}

TEST(RealRoots, RandomProducts) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(-9, 9), pos(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        RatPoly f = RatPoly::constant(Rat(1));
        int factors = 1 + trial % 6;
        for (int i = 0; i < factors; ++i) {
            Rat root(small(rng), pos(rng));
            root.canonicalize();
            f = f * RatPoly{Rat(-root), Rat(1)};
        }
        EXPECT_TRUE(real_roots(f).real_rooted) << "trial " << trial;
        // x^2 + bx + c with b^2 < 4c has no real root.
        int b = small(rng);
        int c = b * b / 4 + pos(rng);
        RatPoly g = f * RatPoly{Rat(c), Rat(b), Rat(1)};
        EXPECT_FALSE(real_roots(g).real_rooted) << "trial " << trial;
    }
}

TEST(Properties, Reports) {
    auto r = check_properties(P({1, 9, 9, 1}));
    EXPECT_TRUE(r.palindromic && r.unimodal && r.log_concave && r.gamma_positive && r.real_rooted);
    EXPECT_EQ(*r.gamma, P({1, 6}));

    auto c5 = check_properties(P({1, 6, 16, 6, 1}));
    EXPECT_TRUE(c5.palindromic && c5.gamma_positive);
    EXPECT_EQ(*c5.gamma, P({1, 2, 6}));
    EXPECT_FALSE(c5.real_rooted);

    auto odd = check_properties(P({1, 1, 0, 1}));
    EXPECT_FALSE(odd.palindromic);
    EXPECT_FALSE(odd.unimodal);
}

TEST(Properties, ImplicationChainOnPositivePolynomials) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(1, 30);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Int> c;
        for (int i = 0; i <= 1 + trial % 6; ++i) c.emplace_back(coeff(rng));
        IntPoly f(c);
        ASSERT_TRUE(all_coefficients_positive(f));
        EXPECT_TRUE(check_properties(f).implications_hold()) << f;
    }
}

TEST(Evaluation, Rational) {
    EXPECT_EQ(evaluate_rational(P({1, 6}), Rat(1, 4)), Rat(5, 2));
    EXPECT_EQ(evaluate_rational(P({1, 2, 6}), Rat(1, 4)) * 16, Rat(30));
    EXPECT_EQ(evaluate_rational(P({7, 2, 6}), Rat(0)), Rat(7));
}
