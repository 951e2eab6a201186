#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "halfdisc/curve/curve.hpp"
#include "halfdisc/exact/factor.hpp"

namespace halfdisc {

enum class ReductionKind { Good, Multiplicative, Additive };

inline const char* to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::Good: return "good";
        case ReductionKind::Multiplicative: return "multiplicative";
        case ReductionKind::Additive: return "additive";
    }
    return "?";
}

struct LocalReduction {
    Integer p;
    long v_delta = 0;
    ReductionKind kind = ReductionKind::Good;
    long k = 0;                       // set for Multiplicative: v_delta = 2k
    bool semistable = true;           // good, or v_p(c4) = 0
    bool roots_rational_at_p = false; // P splits over Q
    bool hypotheses_ok = false;       // semistable, v_delta even, roots rational
    std::string warning;

    /// Predicted limit of (D.H_n)_p / n^2, i.e. v_p(Delta)/2.
    Rational k_target() const { return Rational(Integer(v_delta), Integer(2)); }
    /// Components of the Neron special fiber (2k for multiplicative, 1 for good).
    long component_count() const { return kind == ReductionKind::Multiplicative ? 2 * k : (kind == ReductionKind::Good ? 1 : 0); }
};

/// Distinct integer roots of the monic cubic, ascending. P is monotone between its
/// critical points, so each monotone run of integers is binary searched exactly.
inline std::vector<Integer> integer_roots(const Curve& curve) {
    const ZPoly P = curve.poly();
    const Integer& a = curve.a();
    Integer bound = 1 + abs(curve.a());
    if (abs(curve.b()) + 1 > bound) bound = abs(curve.b()) + 1;
    if (abs(curve.c()) + 1 > bound) bound = abs(curve.c()) + 1;

    std::vector<Integer> out;
    auto consider = [&](const Integer& r) {
        if (P(r) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    };
    // Searches [lo, hi] where P is monotone on the integers.
    auto search = [&](Integer lo, Integer hi) {
        if (lo > hi) return;
        const bool increasing = P(hi) >= P(lo);
        while (lo < hi) {
            const Integer mid = floor_div(lo + hi, Integer(2));
            const Integer v = P(mid);
            if (increasing ? v < 0 : v > 0) lo = mid + 1;
            else hi = mid;
        }
        consider(lo);
    };

    // Critical points (-a -/+ sqrt(d)) / 3 with d = a^2 - 3b.
    const Integer d = a * a - 3 * curve.b();
    if (d <= 0) {
        search(-bound, bound);
    } else {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());  // s <= sqrt(d) < s + 1
        // [t, u] brackets a critical point; the few integers inside are checked directly.
        const Integer t1 = floor_div(-a - s - 1, Integer(3)), u1 = -floor_div(a + s, Integer(3));
        const Integer t2 = floor_div(-a + s, Integer(3)), u2 = -floor_div(a - s - 1, Integer(3));
        search(-bound, t1);
        search(u1, t2);
        search(u2, bound);
        for (Integer r = t1; r <= u1; ++r) consider(r);
        for (Integer r = t2; r <= u2; ++r) consider(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// P splits into linear factors over Q (exact divisor search, P monic).
inline bool roots_rational(const Curve& curve) {
    const auto roots = integer_roots(curve);
    if (roots.empty()) return false;
    // Deflate by one root; the quadratic cofactor splits iff its discriminant is a square.
    const Integer r = roots.front();
    const Integer q1 = curve.a() + r;            // x^2 + q1 x + q0
    const Integer q0 = curve.b() + r * q1;
    const Integer d = q1 * q1 - 4 * q0;
    return d >= 0 && mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

inline LocalReduction reduction_type(const Curve& curve, const Integer& p) {
    if (p == 2) throw std::invalid_argument("residual characteristic 2 excluded");
    require_prime(p);
    LocalReduction r;
    r.p = p;
    r.v_delta = valuation(curve.disc_e(), p);
    r.roots_rational_at_p = roots_rational(curve);
    if (r.v_delta == 0) {
        r.kind = ReductionKind::Good;
        r.semistable = true;
    } else {
        const bool c4_unit = curve.c4() != 0 && valuation(curve.c4(), p) == 0;
        r.semistable = c4_unit;
        if (c4_unit && r.v_delta % 2 == 0) {
            r.kind = ReductionKind::Multiplicative;
            r.k = r.v_delta / 2;
        } else {
            r.kind = ReductionKind::Additive;
            if (c4_unit)
                r.warning = "multiplicative criterion holds but v_p(Delta) is odd; "
                            "P does not split into rational roots at p";
        }
    }
    r.hypotheses_ok = r.semistable && r.v_delta % 2 == 0 && r.roots_rational_at_p;
    return r;
}

/// Odd primes dividing the discriminant of E.
inline std::vector<Integer> bad_primes(const Curve& curve) {
    std::vector<Integer> out;
    for (const auto& p : prime_divisors(curve.disc_p()))
        if (p != 2) out.push_back(p);
    return out;
}

struct HypothesisReport {
    bool p_odd = false;
    bool semistable_at_p = false;
    bool v_delta_even = false;
    bool roots_rational_over_q = false;
    bool n_odd = false;
    std::optional<long> k;             // when multiplicative
    std::optional<Integer> gcd_with_2k;
};

/// Never throws for well-formed integers; p = 2 or non-prime p just clears p_odd.
inline HypothesisReport check_hypotheses(const Curve& curve, const Integer& p, long n) {
    HypothesisReport h;
    h.n_odd = n % 2 != 0;
    h.roots_rational_over_q = roots_rational(curve);
    h.p_odd = p != 2 && is_prime(p);
    if (!h.p_odd) return h;
    const LocalReduction r = reduction_type(curve, p);
    h.semistable_at_p = r.semistable;
    h.v_delta_even = r.v_delta % 2 == 0;
    if (r.kind == ReductionKind::Multiplicative) {
        h.k = r.k;
        h.gcd_with_2k = igcd(Integer(n), Integer(2 * r.k));
    }
    return h;
}

} // namespace halfdisc
