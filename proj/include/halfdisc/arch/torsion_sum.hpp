#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfdisc/arch/roots.hpp"
#include "halfdisc/torsion/torsion_divisor.hpp"

namespace halfdisc {

/// S_n = (1/n^2) sum over H_n of log|P|; each support point of h_n has weight 2.
struct ArchRecord {
    long n = 0;
    long double sn = 0;                        // primary value: root path when run, else exact
    std::optional<long double> sn_roots;       // (2/n^2) sum_beta log|P(beta)| over complex roots
    long double res_log_check = 0;             // (2/n^2)(log|resultant(P,h_n)| - 3 log lc(h_n))
    std::optional<long double> integral_value;
    long double lc_correction = 0;             // 6 log lc(h_n) / n^2
    long double root_backward_error = 0;
    Integer resultant;
    Integer leading_coefficient;
    Integer psi_content;
};

struct TorsionSumOptions {
    bool root_path = true;
    long full_path_limit = kDefaultFullPathLimit;
    long double residual_tolerance = 1e-12L;
    long double agreement_tolerance = 1e-6L;  // relative, max(1, |S_n|)
};

/// Exact-path value from a precomputed resultant.
inline long double torsion_sum_exact(const TorsionResultant& r) {
    if (r.resultant == 0) throw DomainError("divisors share a component (n = " + std::to_string(r.n) + ")");
    const long double n2 = static_cast<long double>(r.n) * static_cast<long double>(r.n);
    return 2.0L * (log_abs(r.resultant) - 3.0L * log_abs(r.leading_coefficient)) / n2;
}

/// (2/n^2) sum log|P(beta)| over the complex roots of h.
inline long double torsion_sum_roots(const Curve& curve, const ZPoly& h, long n, long double tolerance,
                                     long double* backward_error = nullptr) {
    const RootResult rr = integer_polynomial_roots(h, tolerance);
    const long double a = to_long_double(curve.a()), b = to_long_double(curve.b()), c = to_long_double(curve.c());
    KahanSum sum;
    for (const cld& beta : rr.roots) sum.add(std::log(std::abs(((beta + a) * beta + b) * beta + c)));
    if (backward_error) *backward_error = rr.max_backward_error;
    const long double n2 = static_cast<long double>(n) * static_cast<long double>(n);
    return 2.0L * sum.value() / n2;
}

inline ArchRecord torsion_sum(const Curve& curve, long n, const TorsionSumOptions& opts = {}) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("torsion_sum needs odd n >= 3");
    ArchRecord rec;
    rec.n = n;
    const TorsionResultant r = torsion_resultant(curve, n);
    rec.resultant = r.resultant;
    rec.leading_coefficient = r.leading_coefficient;
    rec.psi_content = r.psi_content;
    rec.res_log_check = torsion_sum_exact(r);
    rec.lc_correction = 6.0L * log_abs(r.leading_coefficient) / (static_cast<long double>(n) * n);
    rec.sn = rec.res_log_check;
    if (opts.root_path && n <= opts.full_path_limit) {
        const TorsionDivisor d = torsion_x_polynomial(curve, n, opts.full_path_limit);
        rec.sn_roots = torsion_sum_roots(curve, d.h, n, opts.residual_tolerance, &rec.root_backward_error);
        rec.sn = *rec.sn_roots;
        const long double gap = std::abs(*rec.sn_roots - rec.res_log_check);
        if (gap > opts.agreement_tolerance * std::max(1.0L, std::abs(rec.sn)))
            throw NumericError("torsion sum paths disagree at n = " + std::to_string(n) + ": roots " +
                               std::to_string(static_cast<double>(*rec.sn_roots)) + ", resultant " +
                               std::to_string(static_cast<double>(rec.res_log_check)));
    }
    return rec;
}

} // namespace halfdisc
