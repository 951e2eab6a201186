#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "halfdisc/local/intersection.hpp"

using namespace halfdisc;

namespace {

const Curve& k1_curve() {
    static const Curve e = Curve::from_cubic(1, -2, 0);  // x (x - 1) (x + 2)
    return e;
}
const Curve& k1_other() {
    static const Curve e = Curve::from_cubic(4, -5, 0);  // x (x - 1) (x + 5)
    return e;
}
const Curve& k2_curve() {
    static const Curve e = Curve::from_cubic(8, -9, 0);  // x (x - 1) (x + 9)
    return e;
}

} // namespace

TEST(IntersectionNumber, OracleValues) {
    // resultant(P, h_3) = -1296 = -2^4 3^4; each support point carries multiplicity 2
    EXPECT_EQ(support_intersection(k1_curve(), Integer(3), 3), 4);
    EXPECT_EQ(intersection_number(k1_curve(), Integer(3), 3), 8);
    EXPECT_EQ(intersection_number(k1_curve(), Integer(5), 3), 0);
    // resultant(P, h_3) = -65610000 = -2^4 3^8 5^4
    EXPECT_EQ(intersection_number(k2_curve(), Integer(3), 3), 16);
    EXPECT_EQ(intersection_number(k2_curve(), Integer(5), 3), 8);
    for (long p : {3L, 5L, 7L}) EXPECT_EQ(intersection_number(k2_curve(), Integer(p), 2), 0);
}

TEST(IntersectionNumber, Rejections) {
    EXPECT_THROW(intersection_number(k1_curve(), Integer(2), 3), std::invalid_argument);
    EXPECT_THROW(intersection_number(k1_curve(), Integer(9), 3), std::invalid_argument);
    EXPECT_THROW(intersection_number(k1_curve(), Integer(3), 1), std::invalid_argument);
    TorsionResultant zero;
    zero.n = 3;
    zero.resultant = 0;
    EXPECT_THROW(detail::support_valuation(zero, Integer(3)), DomainError);
}

TEST(IntersectionNumber, FastPathEqualsSubresultantPath) {
    for (const Curve& e : {k1_curve(), k1_other(), k2_curve(), Curve::from_cubic(0, -1, -1), Curve::from_cubic(0, 0, 1)}) {
        for (const auto& p : bad_primes(e)) {
            for (long n = 2; n <= 13; ++n)
                EXPECT_EQ(intersection_number(e, p, n), intersection_number_full(e, p, n)) << e.str() << " p=" << p << " n=" << n;
        }
    }
}

TEST(IntersectionNumber, MultiplicativeLawOnSplitCurves) {
    // exact data on curves with rational roots: (D.H_n)_p = k (n^2 - 1) for odd n
    const std::vector<long> ns = odd_range(31);
    for (const auto& [curve, p, k] : {std::tuple{k1_curve(), 3L, 1L}, {k1_other(), 3L, 1L}, {k1_other(), 5L, 1L},
                                      {k2_curve(), 3L, 2L}, {k2_curve(), 5L, 1L}}) {
        const auto recs = convergence_sequence(curve, Integer(p), ns);
        for (const auto& r : recs) EXPECT_EQ(r.value, k * (r.n * r.n - 1)) << curve.str() << " p=" << p << " n=" << r.n;
    }
}

TEST(IntersectionNumber, GoodReductionVanishes) {
    std::mt19937_64 g(59);
    std::uniform_int_distribution<long> d(-25, 25);
    int tested = 0;
    while (tested < 8) {
        const long a = d(g), b = d(g), c = d(g);
        if (discriminant(ZPoly{c, b, a, 1}) == 0) continue;
        const Curve e = Curve::from_cubic(a, b, c);
        for (long p : {3L, 5L, 7L, 11L}) {
            if (e.disc_e() % p == 0) continue;
            for (long n = 3; n <= 15; n += 2)
                if (n % p != 0) {
                    EXPECT_EQ(intersection_number(e, Integer(p), n), 0) << e.str() << " p=" << p << " n=" << n;
                }
        }
        ++tested;
    }
}

TEST(IntersectionNumber, TranslationInvariance) {
    std::mt19937_64 g(61);
    std::uniform_int_distribution<long> d(-12, 12);
    int tested = 0;
    while (tested < 20) {
        const long a = d(g), b = d(g), c = d(g);
        if (discriminant(ZPoly{c, b, a, 1}) == 0) continue;
        const Curve e = Curve::from_cubic(a, b, c);
        const auto bad = bad_primes(e);
        if (bad.empty()) continue;
        const Integer p = bad[g() % bad.size()];
        const long n = 3 + 2 * static_cast<long>(g() % 7);
        const Integer t = d(g);
        const Curve s = e.translated(t);
        EXPECT_EQ(s.disc_p(), e.disc_p());
        EXPECT_EQ(intersection_number(s, p, n), intersection_number(e, p, n)) << e.str() << " t=" << t << " p=" << p;
        ++tested;
    }
}

TEST(ConvergenceSequence, RecordsAndValidation) {
    const auto recs = convergence_sequence(k1_curve(), Integer(3), {3, 5, 7, 9, 11});
    ASSERT_EQ(recs.size(), 5u);
    EXPECT_EQ(recs.back().value, 120);
    EXPECT_EQ(recs.back().ratio, Rational(Integer(120), Integer(121)));
    EXPECT_EQ(recs.back().k_target, Rational(1));
    EXPECT_THROW(convergence_sequence(k1_curve(), Integer(3), {3, 4, 5}), std::invalid_argument);
    EXPECT_THROW(convergence_sequence(k1_curve(), Integer(3), {5, 3}), std::invalid_argument);
    EXPECT_EQ(convergence_sequence(k1_curve(), Integer(3), {3, 4, 5}, true)[1].value,
              intersection_number_full(k1_curve(), Integer(3), 4));
    EXPECT_TRUE(convergence_sequence(k1_curve(), Integer(3), {}).empty());
}

TEST(ConvergenceSequence, IndependentOfThreadCount) {
    const auto ns = odd_range(41);
    setenv("HALFDISC_THREADS", "1", 1);
    const auto one = convergence_sequence(k2_curve(), Integer(3), ns);
    setenv("HALFDISC_THREADS", "6", 1);
    const auto six = convergence_sequence(k2_curve(), Integer(3), ns);
    unsetenv("HALFDISC_THREADS");
    ASSERT_EQ(one.size(), six.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].n, six[i].n);
        EXPECT_EQ(one[i].value, six[i].value);
    }
}

TEST(LimitReport, SplitCurves) {
    auto rep = limit_report(convergence_sequence(k1_curve(), Integer(3), odd_range(51)));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.constant, Rational(2));
    for (const auto& row : rep.rows) EXPECT_EQ(row.abs_error, Rational(Integer(1), Integer(row.n * row.n)));

    rep = limit_report(convergence_sequence(k2_curve(), Integer(3), odd_range(51)));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.constant, Rational(8));
    for (const auto& row : rep.rows) EXPECT_LE(row.abs_error, Rational(Integer(8), Integer(row.n)));
}

TEST(LimitReport, ConstantRecordsAndMinimumSize) {
    std::vector<IntersectionRecord> recs;
    for (long n : {3L, 5L, 7L}) {
        IntersectionRecord r;
        r.p = 3;
        r.n = n;
        r.value = 2 * n * n;
        r.ratio = Rational(2);
        r.k_target = Rational(2);
        recs.push_back(r);
    }
    const auto rep = limit_report(recs);
    EXPECT_TRUE(rep.pass);
    for (const auto& row : rep.rows) EXPECT_TRUE(row.abs_error.is_zero());
    recs.pop_back();
    EXPECT_THROW(limit_report(recs), std::invalid_argument);
    recs.push_back(recs.back());
    recs.back().ratio = Rational(3);
    EXPECT_FALSE(limit_report(recs, Rational(1)).pass);
}
