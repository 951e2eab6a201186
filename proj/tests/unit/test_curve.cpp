#include <random>

#include <gtest/gtest.h>

#include "halfdisc/curve/reduction.hpp"

using namespace halfdisc;

TEST(Curve, Invariants) {
    const Curve e = Curve::from_cubic(1, -2, 0);
    EXPECT_EQ(e.disc_p(), Integer(36));
    EXPECT_EQ(e.c4(), Integer(112));
    EXPECT_EQ(e.disc_e(), Integer(576));
    EXPECT_EQ(Curve::from_cubic(0, -1, -1).disc_p(), Integer(-23));
    EXPECT_THROW(Curve::from_cubic(0, 0, 0), DomainError);
    EXPECT_THROW(Curve::from_cubic(-2, 1, 0), DomainError);  // x (x - 1)^2
}

TEST(Curve, DiscriminantAgreesWithResultant) {
    std::mt19937_64 g(41);
    std::uniform_int_distribution<long> d(-60, 60);
    for (int i = 0; i < 100; ++i) {
        const Integer a = d(g), b = d(g), c = d(g);
        const ZPoly P{c, b, a, Integer(1)};
        const Integer disc = discriminant(P);
        if (disc == 0) {
            EXPECT_THROW(Curve::from_cubic(a, b, c), DomainError);
            continue;
        }
        EXPECT_EQ(Curve::from_cubic(a, b, c).disc_p(), disc);
    }
}

TEST(Curve, TranslationInvariance) {
    std::mt19937_64 g(43);
    std::uniform_int_distribution<long> d(-40, 40);
    int tested = 0;
    while (tested < 50) {
        const Integer a = d(g), b = d(g), c = d(g), t = d(g);
        if (discriminant(ZPoly{c, b, a, Integer(1)}) == 0) continue;
        const Curve e = Curve::from_cubic(a, b, c);
        const Curve s = e.translated(t);
        EXPECT_EQ(s.disc_p(), e.disc_p());
        EXPECT_EQ(s.c4(), e.c4());
        EXPECT_EQ(s.poly(), e.poly().shift(t));
        ++tested;
    }
}

TEST(Reduction, Examples) {
    const Curve k1 = Curve::from_cubic(1, -2, 0);
    auto r = reduction_type(k1, Integer(3));
    EXPECT_EQ(r.kind, ReductionKind::Multiplicative);
    EXPECT_EQ(r.k, 1);
    EXPECT_EQ(r.component_count(), 2);
    EXPECT_TRUE(r.hypotheses_ok);
    EXPECT_EQ(r.k_target(), Rational(1));

    EXPECT_EQ(reduction_type(Curve::from_cubic(0, -1, -1), Integer(5)).kind, ReductionKind::Good);

    const Curve cusp = Curve::from_cubic(0, 0, -3);
    EXPECT_EQ(cusp.disc_p(), Integer(-243));
    r = reduction_type(cusp, Integer(3));
    EXPECT_EQ(r.kind, ReductionKind::Additive);
    EXPECT_FALSE(r.semistable);

    const Curve k2 = Curve::from_cubic(8, -9, 0);  // x (x - 1) (x + 9)
    r = reduction_type(k2, Integer(3));
    EXPECT_EQ(r.v_delta, 4);
    EXPECT_EQ(r.kind, ReductionKind::Multiplicative);
    EXPECT_EQ(r.k, 2);
    EXPECT_EQ(r.component_count(), 4);

    EXPECT_THROW(reduction_type(k1, Integer(2)), std::invalid_argument);
    EXPECT_THROW(reduction_type(k1, Integer(9)), std::invalid_argument);
}

TEST(Reduction, OddValuationIsFlagged) {
    const auto r = reduction_type(Curve::from_cubic(0, -1, -1), Integer(23));
    EXPECT_EQ(r.kind, ReductionKind::Additive);
    EXPECT_TRUE(r.semistable);
    EXPECT_FALSE(r.hypotheses_ok);
    EXPECT_FALSE(r.warning.empty());
    EXPECT_EQ(r.k_target(), Rational(Integer(1), Integer(2)));
}

TEST(Reduction, GoodAwayFromDiscriminant) {
    std::mt19937_64 g(47);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int i = 0; i < 40; ++i) {
        const Integer a = d(g), b = d(g), c = d(g);
        if (discriminant(ZPoly{c, b, a, Integer(1)}) == 0) continue;
        const Curve e = Curve::from_cubic(a, b, c);
        for (long p : {3L, 5L, 7L, 11L, 13L, 101L}) {
            const auto r = reduction_type(e, Integer(p));
            if (e.disc_e() % p != 0) {
                EXPECT_EQ(r.kind, ReductionKind::Good);
            } else {
                EXPECT_NE(r.kind, ReductionKind::Good);
            }
            if (r.kind == ReductionKind::Multiplicative) {
                EXPECT_EQ(r.v_delta, 2 * r.k);
                EXPECT_EQ(r.component_count(), 2 * r.k);
            }
        }
    }
}

TEST(Hypotheses, Examples) {
    auto h = check_hypotheses(Curve::from_cubic(1, -2, 0), Integer(3), 5);
    EXPECT_TRUE(h.p_odd && h.semistable_at_p && h.v_delta_even && h.roots_rational_over_q && h.n_odd);
    ASSERT_TRUE(h.gcd_with_2k.has_value());
    EXPECT_EQ(*h.gcd_with_2k, Integer(1));

    h = check_hypotheses(Curve::from_cubic(8, -9, 0), Integer(3), 5);
    EXPECT_TRUE(h.semistable_at_p);
    EXPECT_EQ(h.k, 2);
    EXPECT_EQ(*h.gcd_with_2k, Integer(1));

    h = check_hypotheses(Curve::from_cubic(0, -1, -1), Integer(23), 3);
    EXPECT_FALSE(h.roots_rational_over_q);
    EXPECT_TRUE(h.semistable_at_p);
    EXPECT_FALSE(h.v_delta_even);

    h = check_hypotheses(Curve::from_cubic(1, -2, 0), Integer(2), 4);
    EXPECT_FALSE(h.p_odd);
    EXPECT_FALSE(h.n_odd);
    EXPECT_NO_THROW(check_hypotheses(Curve::from_cubic(1, -2, 0), Integer(15), 3));
}

TEST(Roots, IntegerRootSearch) {
    EXPECT_EQ(integer_roots(Curve::from_cubic(1, -2, 0)), (std::vector<Integer>{-2, 0, 1}));
    EXPECT_EQ(integer_roots(Curve::from_cubic(8, -9, 0)), (std::vector<Integer>{-9, 0, 1}));
    EXPECT_TRUE(integer_roots(Curve::from_cubic(0, -1, -1)).empty());
    EXPECT_TRUE(roots_rational(Curve::from_cubic(-6, 11, -6)));
    EXPECT_FALSE(roots_rational(Curve::from_cubic(0, -2, 0)));  // x (x^2 - 2)
    EXPECT_EQ(bad_primes(Curve::from_cubic(1, -2, 0)), (std::vector<Integer>{3}));
}

TEST(Roots, IntegerRootSearchAgainstEnumeration) {
    std::mt19937_64 g(71);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int i = 0; i < 400; ++i) {
        const long a = d(g), b = d(g), c = d(g);
        if (discriminant(ZPoly{c, b, a, 1}) == 0) continue;
        const Curve e = Curve::from_cubic(a, b, c);
        std::vector<Integer> brute;
        for (long r = -200; r <= 200; ++r)
            if (e.poly()(Integer(r)) == 0) brute.emplace_back(r);
        EXPECT_EQ(integer_roots(e), brute) << e.str();
    }
}

TEST(Roots, IntegerRootSearchLargeRoots) {
    // roots with large prime factors; (x - r)(x^2 + x + q) keeps one integer root
    const Integer p = integer_from_string("1000000007"), q = integer_from_string("998244353");
    const std::vector<std::vector<Integer>> cases{{-p * q, Integer(3), p}, {-q, Integer(0), p * q}, {Integer(-5), Integer(-4), q}};
    for (const auto& r : cases) {
        const ZPoly f = ZPoly{-r[0], 1} * ZPoly{-r[1], 1} * ZPoly{-r[2], 1};
        auto sorted = r;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(integer_roots(Curve::from_cubic(f.coeff(2), f.coeff(1), f.coeff(0))), sorted);
    }
    const ZPoly f = ZPoly{-p * q, 1} * ZPoly{q, 1, 1};
    EXPECT_EQ(integer_roots(Curve::from_cubic(f.coeff(2), f.coeff(1), f.coeff(0))), (std::vector<Integer>{p * q}));
}
