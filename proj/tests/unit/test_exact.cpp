#include <random>

#include <gtest/gtest.h>

#include "halfdisc/exact/factor.hpp"
#include "halfdisc/exact/mod_poly.hpp"
#include "halfdisc/exact/quotient_ring.hpp"
#include "halfdisc/exact/resultant.hpp"
#include "support/oracles.hpp"

using namespace halfdisc;

namespace {

ZPoly random_poly(std::mt19937_64& g, int max_degree, long bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<Integer> c(static_cast<std::size_t>(deg(g)) + 1);
    for (auto& v : c) v = coef(g);
    while (c.back() == 0) c.back() = coef(g);
    return ZPoly(c);
}

Rational random_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
    long n = 0;
    while (n == 0) n = num(g);
    return Rational(Integer(n), Integer(den(g)));
}

} // namespace

TEST(Rational, CanonicalForm) {
    const Rational q(Integer(6), Integer(-4));
    EXPECT_EQ(q.num(), Integer(-3));
    EXPECT_EQ(q.den(), Integer(2));
    const Rational z(Integer(0), Integer(-7));
    EXPECT_EQ(z.num(), Integer(0));
    EXPECT_EQ(z.den(), Integer(1));
    EXPECT_EQ(Rational::from_string("10/-4"), Rational(Integer(-5), Integer(2)));
    EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
    EXPECT_THROW(Rational(1) / Rational(0), DomainError);
    EXPECT_LT(Rational(Integer(1), Integer(3)), Rational(Integer(1), Integer(2)));
}

TEST(Valuation, Examples) {
    EXPECT_EQ(valuation(Rational(36), Integer(3)), 2);
    EXPECT_EQ(valuation(Rational(1), Integer(5)), 0);
    EXPECT_EQ(valuation(Rational(Integer(9), Integer(4)), Integer(2)), -2);
    EXPECT_THROW(valuation(Rational(0), Integer(3)), DomainError);
    EXPECT_THROW(valuation(Rational(12), Integer(4)), std::invalid_argument);
    EXPECT_THROW(valuation(Integer(0), Integer(3)), DomainError);
}

TEST(Valuation, Additive) {
    std::mt19937_64 g(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(g), b = random_rational(g);
        for (long p : {2L, 3L, 5L, 7L})
            EXPECT_EQ(valuation(a * b, Integer(p)), valuation(a, Integer(p)) + valuation(b, Integer(p)));
    }
}

TEST(Poly, DegreeSentinel) {
    const ZPoly zero;
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.degree(), Degree::neg_inf());
    EXPECT_THROW((void)zero.degree().value(), DomainError);
    EXPECT_THROW((void)zero.lc(), DomainError);
    EXPECT_LT(zero.degree(), ZPoly{5}.degree());
    EXPECT_EQ((ZPoly{1, 2} * zero).degree(), Degree::neg_inf());
    EXPECT_EQ((ZPoly{1, 2, 3} - ZPoly{1, 2, 3}).degree(), Degree::neg_inf());
}

TEST(Poly, Arithmetic) {
    const ZPoly f{1, 1};
    const ZPoly g{-1, 1};
    EXPECT_EQ(f * g, (ZPoly{-1, 0, 1}));
    EXPECT_EQ((ZPoly{-1, 0, 1}).derivative(), (ZPoly{0, 2}));
    EXPECT_EQ((ZPoly{0, 0, 1}).shift(Integer(3)), (ZPoly{9, 6, 1}));
    EXPECT_EQ((ZPoly{2, 0, 1})(Integer(3)), Integer(11));
    auto [q, r] = to_rational(ZPoly{1, 0, 0, 1}).divmod(to_rational(ZPoly{1, 2}));
    EXPECT_EQ(q * to_rational(ZPoly{1, 2}) + r, to_rational(ZPoly{1, 0, 0, 1}));
    EXPECT_LT(r.degree(), 1);
    EXPECT_EQ((ZPoly{6, 0, 9}).exact_div(Integer(3)), (ZPoly{2, 0, 3}));
    EXPECT_THROW((ZPoly{6, 0, 9}).exact_div(Integer(4)), DomainError);
}

TEST(ContentPrimitive, Examples) {
    auto s = content_primitive(ZPoly{9, 0, 6});
    EXPECT_EQ(s.content, Integer(3));
    EXPECT_EQ(s.primitive, (ZPoly{3, 0, 2}));
    EXPECT_EQ(s.sign, 1);
    s = content_primitive(ZPoly{-1, 1});
    EXPECT_EQ(s.content, Integer(1));
    EXPECT_EQ(s.primitive, (ZPoly{-1, 1}));
    s = content_primitive(ZPoly{0, -4});
    EXPECT_EQ(s.content, Integer(4));
    EXPECT_EQ(s.primitive, (ZPoly{0, 1}));
    EXPECT_EQ(s.sign, -1);
    EXPECT_THROW(content_primitive(ZPoly{}), DomainError);
}

TEST(ContentPrimitive, RoundTrip) {
    std::mt19937_64 g(5);
    for (int i = 0; i < 200; ++i) {
        ZPoly f = random_poly(g, 8, 40) * Integer(static_cast<long>(g() % 12) + 1);
        const auto s = content_primitive(f);
        EXPECT_GT(s.content, 0);
        EXPECT_GT(s.primitive.lc(), 0);
        Integer gcd = 0;
        for (const auto& c : s.primitive.coeffs()) gcd = igcd(gcd, c);
        EXPECT_EQ(gcd, 1);
        EXPECT_EQ(s.primitive * Integer(s.sign * s.content), f);
    }
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(ZPoly{1, 0, 1}, ZPoly{-1, 1}), Integer(2));
    EXPECT_EQ(resultant(ZPoly{0, 0, 0, 1}, ZPoly{5}), Integer(125));
    EXPECT_THROW(resultant(ZPoly{1, 1}, ZPoly{}), DomainError);
    // resultant(g, x - a) = g(a) in every degree
    std::mt19937_64 gen(3);
    for (int i = 0; i < 50; ++i) {
        const ZPoly g = random_poly(gen, 7, 30);
        const Integer a = static_cast<long>(gen() % 21) - 10;
        EXPECT_EQ(resultant(g, ZPoly{Integer(-a), Integer(1)}), g(a));
    }
}

TEST(Resultant, MatchesSylvesterDeterminant) {
    std::mt19937_64 g(17);
    for (int i = 0; i < 150; ++i) {
        const ZPoly f = random_poly(g, 6, 50), h = random_poly(g, 6, 50);
        EXPECT_EQ(Rational(resultant(f, h)), oracle::sylvester_determinant(f, h)) << f << " | " << h;
    }
}

TEST(Resultant, MultiplicativeAndAntisymmetric) {
    std::mt19937_64 g(23);
    for (int i = 0; i < 150; ++i) {
        const ZPoly f = random_poly(g, 6, 50), u = random_poly(g, 6, 50), v = random_poly(g, 6, 50);
        EXPECT_EQ(resultant(f, u * v), resultant(f, u) * resultant(f, v));
        const long df = f.degree().value(), du = u.degree().value();
        const Integer sign = ((df * du) % 2 == 0) ? 1 : -1;
        EXPECT_EQ(resultant(f, u), sign * resultant(u, f));
        const Integer r = resultant(f, u);
        if (r != 0) {
            for (long p : {2L, 3L, 5L}) EXPECT_GE(valuation(r, Integer(p)), 0);
        }
    }
}

TEST(Resultant, RationalInputs) {
    const QPoly f{Rational(Integer(1), Integer(2)), Rational(0), Rational(1)};
    const QPoly g{Rational(Integer(-1), Integer(3)), Rational(1)};
    // f(1/3) = 1/2 + 1/9
    EXPECT_EQ(resultant(f, g), Rational(Integer(11), Integer(18)));
}

TEST(Resultant, CubicDiscriminant) {
    // -4p^3 - 27q^2 for x^3 + p x + q
    EXPECT_EQ(discriminant(ZPoly{-1, -1, 0, 1}), Integer(-23));
    EXPECT_EQ(discriminant(ZPoly{0, -2, 1, 1}), Integer(36));
}

TEST(QuotientRing, Examples) {
    const auto m = CubicModulus<Integer>::from_poly(ZPoly{-2, 0, 0, 1});
    const auto x = QuotientElem<Integer>::from_poly(ZPoly{0, 1}, m);
    const auto x2 = QuotientElem<Integer>::from_poly(ZPoly{0, 0, 1}, m);
    EXPECT_EQ(x * x2, QuotientElem<Integer>::from_poly(ZPoly{2}, m));
    EXPECT_EQ(x2 * x2, QuotientElem<Integer>::from_poly(ZPoly{0, 2}, m));
    EXPECT_EQ(x2 * QuotientElem<Integer>::one(m), x2);
    const auto other = CubicModulus<Integer>::from_poly(ZPoly{-3, 0, 0, 1});
    EXPECT_THROW(x * QuotientElem<Integer>::one(other), std::invalid_argument);
    EXPECT_THROW(CubicModulus<Integer>::from_poly(ZPoly{1, 0, 2}), std::invalid_argument);
    EXPECT_THROW(CubicModulus<Integer>::from_poly(ZPoly{1, 0, 0, 2}), std::invalid_argument);
}

TEST(QuotientRing, ProductAndNormMatchFullArithmetic) {
    std::mt19937_64 g(29);
    for (int i = 0; i < 100; ++i) {
        ZPoly mp = random_poly(g, 2, 20) + ZPoly::monomial(Integer(1), 3);
        const auto m = CubicModulus<Integer>::from_poly(mp);
        const ZPoly u = random_poly(g, 9, 30), v = random_poly(g, 9, 30);
        const auto qu = QuotientElem<Integer>::from_poly(u, m);
        const auto qv = QuotientElem<Integer>::from_poly(v, m);
        EXPECT_EQ(qu * qv, QuotientElem<Integer>::from_poly(u * v, m));
        EXPECT_EQ(qu + qv, QuotientElem<Integer>::from_poly(u + v, m));
        // resultant(m, u) = (-1)^{3 deg u} N(u mod m)
        const Integer sign = (u.degree().value() % 2 == 0) ? 1 : -1;
        EXPECT_EQ(resultant(mp, u), sign * qu.norm());
    }
}

TEST(ModPoly, MatchesIntegerReduction) {
    std::mt19937_64 g(31);
    for (std::uint64_t m : {101ULL, 343ULL, 4294967291ULL}) {
        for (int i = 0; i < 30; ++i) {
            const ZPoly u = random_poly(g, 10, 1000000), v = random_poly(g, 10, 1000000);
            EXPECT_EQ(ModPoly::from_integer_poly(u, m) * ModPoly::from_integer_poly(v, m),
                      ModPoly::from_integer_poly(u * v, m));
            EXPECT_EQ(ModPoly::from_integer_poly(u, m) - ModPoly::from_integer_poly(v, m),
                      ModPoly::from_integer_poly(u - v, m));
        }
    }
    EXPECT_EQ(mod_inverse(2, 27) * 2 % 27, 1u);
}

TEST(Factor, PartialAndComplete) {
    const Integer v = integer_from_string("-2999999999999999999999999999999999999998");
    const Factorization f = factor_partial(v, {}, 1000);
    Integer prod = f.cofactor;
    for (const auto& [p, e] : f.factors) prod *= ipow(p, static_cast<unsigned long>(e));
    EXPECT_EQ(prod, abs(v));
    const Factorization g = factor_partial(Integer(2 * 2 * 3 * 23 * 23), {}, 100);
    ASSERT_TRUE(g.complete());
    ASSERT_EQ(g.factors.size(), 3u);
    EXPECT_EQ(g.factors[2], (std::pair<Integer, long>{Integer(23), 2}));
    EXPECT_EQ(prime_divisors(Integer(-36)), (std::vector<Integer>{2, 3}));
    EXPECT_THROW(factor_partial(Integer(0)), DomainError);
}
