#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "halfdisc/arch/roots.hpp"
#include "halfdisc/curve/curve.hpp"

namespace halfdisc {

/// Real arithmetic-geometric mean of positive a, b.
inline long double agm(long double a, long double b, int max_iter = 64) {
    if (!(a > 0) || !(b > 0))
        throw NumericError("AGM needs positive arguments, got " + std::to_string(static_cast<double>(a)) + ", " +
                           std::to_string(static_cast<double>(b)));
    for (int i = 0; i < max_iter; ++i) {
        if (std::abs(a - b) <= 4 * std::numeric_limits<long double>::epsilon() * a) return a;
        const long double m = (a + b) / 2;
        b = std::sqrt(a * b);
        a = m;
    }
    throw NumericError("AGM did not converge: a = " + std::to_string(static_cast<double>(a)) +
                       ", b = " + std::to_string(static_cast<double>(b)));
}

/// Integer change of basis (w1', w2') = (a w1 + b w2, c w1 + d w2) with determinant 1.
struct BasisChange {
    long a = 1, b = 0, c = 0, d = 1;
};

/// Period lattice of the invariant differential dx/(2y): the lattice with
/// C/Lambda = E(C) and wp(z) = x + a/3.
struct PeriodData {
    cld omega1;  // real period
    cld omega2;
    cld w1;      // reduced basis, w2/w1 = tau
    cld w2;
    cld tau;     // in the standard fundamental domain
    long double im_tau = 0;
    BasisChange reduction;           // (w1, w2) in terms of (omega1, omega2)
    std::array<cld, 3> roots;        // roots of P
    std::array<cld, 3> shifted_roots;  // roots of P shifted by a/3 (the e_i)
    bool three_real_roots = false;
};

namespace detail {

inline std::array<cld, 3> cubic_roots(const Curve& curve) {
    std::vector<long double> c{to_long_double(curve.c()), to_long_double(curve.b()), to_long_double(curve.a()), 1.0L};
    RootResult r = polynomial_roots(c, 1e-15L);
    return {r.roots[0], r.roots[1], r.roots[2]};
}

/// Moves tau = w2/w1 into |Re tau| <= 1/2, |tau| >= 1, tracking the basis.
inline void reduce_basis(cld& w1, cld& w2, BasisChange& m) {
    for (int it = 0; it < 200; ++it) {
        const cld tau = w2 / w1;
        const long shift = std::lround(static_cast<double>(tau.real()));
        if (shift != 0) {
            w2 -= static_cast<long double>(shift) * w1;
            m.c -= shift * m.a;
            m.d -= shift * m.b;
        }
        if (std::norm(w2 / w1) < 1.0L - 1e-15L) {
            // tau -> -1/tau: (w1, w2) -> (w2, -w1)
            const cld t = w1;
            w1 = w2;
            w2 = -t;
            std::swap(m.a, m.c);
            std::swap(m.b, m.d);
            m.c = -m.c;
            m.d = -m.d;
        } else {
            return;
        }
    }
    throw NumericError("fundamental-domain reduction did not terminate");
}

} // namespace detail

inline PeriodData periods(const Curve& curve) {
    PeriodData pd;
    const long double pi = std::numbers::pi_v<long double>;
    const long double a = to_long_double(curve.a());
    auto r = detail::cubic_roots(curve);
    pd.three_real_roots = curve.disc_p() > 0;
    if (pd.three_real_roots) {
        std::array<long double, 3> e{r[0].real(), r[1].real(), r[2].real()};
        std::sort(e.begin(), e.end(), std::greater<>());
        pd.omega1 = pi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[0] - e[1]));
        pd.omega2 = cld(0, pi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[1] - e[2])));
        for (int i = 0; i < 3; ++i) pd.roots[i] = e[i];
    } else {
        std::sort(r.begin(), r.end(), [](const cld& u, const cld& v) { return std::abs(u.imag()) < std::abs(v.imag()); });
        const long double e1 = r[0].real();
        const long double beta = std::sqrt(3 * e1 * e1 + 2 * a * e1 + to_long_double(curve.b()));
        const long double alpha = 3 * e1 + a;
        pd.omega1 = 2 * pi / agm(2 * std::sqrt(beta), std::sqrt(2 * beta + alpha));
        pd.omega2 = -pd.omega1 / 2.0L + cld(0, pi / agm(2 * std::sqrt(beta), std::sqrt(2 * beta - alpha)));
        pd.roots = {cld(e1, 0), r[1].imag() > 0 ? r[1] : r[2], r[1].imag() > 0 ? r[2] : r[1]};
    }
    for (int i = 0; i < 3; ++i) pd.shifted_roots[i] = pd.roots[i] + a / 3;
    if ((pd.omega2 / pd.omega1).imag() < 0) pd.omega2 = -pd.omega2;
    pd.w1 = pd.omega1;
    pd.w2 = pd.omega2;
    detail::reduce_basis(pd.w1, pd.w2, pd.reduction);
    pd.tau = pd.w2 / pd.w1;
    pd.im_tau = pd.tau.imag();
    return pd;
}

} // namespace halfdisc
