#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfdisc/curve/reduction.hpp"
#include "halfdisc/torsion/torsion_divisor.hpp"
#include "halfdisc/util/parallel.hpp"

namespace halfdisc {

struct IntersectionRecord {
    Integer p;
    long n = 0;
    long value = 0;          // (D.H_n)_p
    long support_value = 0;  // v_p(resultant(P, h_n)) on the reduced support
    Rational ratio;          // value / n^2
    Rational k_target;       // v_p(Delta) / 2
};

namespace detail {

inline void require_odd_prime(const Integer& p) {
    if (p == 2) throw std::invalid_argument("p = 2 is excluded (residual characteristic 2)");
    require_prime(p);
}

inline long support_valuation(const TorsionResultant& r, const Integer& p) {
    if (r.resultant == 0) throw DomainError("divisors share a component (n = " + std::to_string(r.n) + ")");
    return valuation(r.resultant, p);
}

} // namespace detail

/// v_p(resultant(P, h_n)) via the norm from Z[x]/(P).
inline long support_intersection(const Curve& curve, const Integer& p, long n) {
    detail::require_odd_prime(p);
    return detail::support_valuation(torsion_resultant(curve, n), p);
}

/// (D.H_n)_p. H_n carries each x-value with multiplicity 2 (the points +-Q), so this is
/// twice the valuation on the support.
inline long intersection_number(const Curve& curve, const Integer& p, long n) {
    return 2 * support_intersection(curve, p, n);
}

/// Same quantity from the explicit h_n and the subresultant PRS; n up to the full-path limit.
inline long intersection_number_full(const Curve& curve, const Integer& p, long n) {
    detail::require_odd_prime(p);
    const TorsionDivisor d = torsion_x_polynomial(curve, n);
    const Integer res = resultant(curve.poly(), d.h);
    if (res == 0) throw DomainError("divisors share a component (n = " + std::to_string(n) + ")");
    return d.multiplicity * valuation(res, p);
}

/// One record per n, computed from a shared quotient-ring table; the per-n tail
/// (content, norm, valuation) fans out over HALFDISC_THREADS workers.
inline std::vector<IntersectionRecord> convergence_sequence(const Curve& curve, const Integer& p,
                                                            const std::vector<long>& n_list, bool allow_even = false) {
    detail::require_odd_prime(p);
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const long n = n_list[i];
        if (n < 2) throw std::invalid_argument("n must be >= 2");
        if (n % 2 == 0 && !allow_even) throw std::invalid_argument("even n requires the even option");
        if (i > 0 && n <= n_list[i - 1]) throw std::invalid_argument("n list must be strictly ascending");
    }
    const Rational k_target = reduction_type(curve, p).k_target();
    TorsionResultants table(curve);
    std::vector<QuotientElem<Integer>> psi;
    psi.reserve(n_list.size());
    for (long n : n_list) psi.push_back(table.psi_mod_p(n));

    std::vector<IntersectionRecord> out(n_list.size());
    parallel_for(n_list.size(), [&](std::size_t i) {
        const long n = n_list[i];
        const TorsionResultant r = TorsionResultants::finish(curve, n, psi[i]);
        IntersectionRecord rec;
        rec.p = p;
        rec.n = n;
        rec.support_value = detail::support_valuation(r, p);
        rec.value = 2 * rec.support_value;
        rec.ratio = Rational(Integer(rec.value), Integer(n) * n);
        rec.k_target = k_target;
        out[i] = std::move(rec);
    });
    return out;
}

/// Odd n in [3, n_max].
inline std::vector<long> odd_range(long n_max, long n_min = 3) {
    std::vector<long> out;
    for (long n = n_min + (n_min % 2 == 0 ? 1 : 0); n <= n_max; n += 2) out.push_back(n);
    return out;
}

struct LimitRow {
    long n = 0;
    Rational ratio;
    Rational abs_error;
    Rational bound;
    bool pass = false;
};

struct LimitReport {
    Rational k;
    Rational constant;  // C(k); rows pass when |ratio - k| <= C(k)/n
    std::vector<LimitRow> rows;
    bool pass = true;
};

/// Default tolerance constant 2k + 2k(k-1).
inline Rational default_limit_constant(const Rational& k) { return Rational(2) * k + Rational(2) * k * (k - Rational(1)); }

inline LimitReport limit_report(const std::vector<IntersectionRecord>& records,
                                std::optional<Rational> constant = std::nullopt) {
    if (records.size() < 3) throw std::invalid_argument("limit_report needs at least 3 records");
    LimitReport rep;
    rep.k = records.front().k_target;
    rep.constant = constant ? *constant : default_limit_constant(rep.k);
    for (const auto& r : records) {
        LimitRow row;
        row.n = r.n;
        row.ratio = r.ratio;
        row.abs_error = (r.ratio - rep.k).abs();
        row.bound = rep.constant / Rational(r.n);
        row.pass = row.abs_error <= row.bound;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace halfdisc
