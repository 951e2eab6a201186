#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "halfdisc/exact/errors.hpp"
#include "halfdisc/exact/poly.hpp"

namespace halfdisc {

using cld = std::complex<long double>;

/// Kahan-compensated long double accumulator.
class KahanSum {
public:
    void add(long double v) {
        const long double y = v - comp_;
        const long double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    long double value() const { return sum_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

struct RootResult {
    std::vector<cld> roots;
    int iterations = 0;
    long double max_backward_error = 0.0L;
};

namespace detail {

// p(z)/p'(z) and the backward error |p(z)| / sum |c_i||z|^i, evaluating the reversed
// polynomial when |z| > 1 so nothing overflows.
struct NewtonData {
    cld ratio;
    long double backward_error;
};

inline NewtonData newton_data(const std::vector<long double>& c, cld z) {
    const std::size_t d = c.size() - 1;
    if (std::abs(z) <= 1.0L) {
        cld p = c[d], dp = 0;
        long double mag = std::abs(c[d]);
        const long double az = std::abs(z);
        for (std::size_t i = d; i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
            mag = mag * az + std::abs(c[i]);
        }
        return {p / dp, std::abs(p) / mag};
    }
    const cld w = 1.0L / z;
    const long double aw = std::abs(w);
    cld q = c[0], dq = 0;
    long double mag = std::abs(c[0]);
    for (std::size_t i = 1; i <= d; ++i) {
        dq = dq * w + q;
        q = q * w + c[i];
        mag = mag * aw + std::abs(c[i]);
    }
    // p(z) = z^d q(w), p'(z) = z^{d-1} (d q(w) - w q'(w))
    return {z * q / (static_cast<long double>(d) * q - w * dq), std::abs(q) / mag};
}

// Initial radii from the upper convex hull of (i, log|c_i|).
inline std::vector<cld> newton_polygon_start(const std::vector<long double>& c) {
    const std::size_t d = c.size() - 1;
    std::vector<long double> lg(d + 1);
    for (std::size_t i = 0; i <= d; ++i) lg[i] = c[i] != 0 ? std::log(std::abs(c[i])) : -1e30L;
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i <= d; ++i) {
        if (c[i] == 0) continue;
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull.back();
            if ((lg[b] - lg[a]) * static_cast<long double>(i - a) <= (lg[i] - lg[a]) * static_cast<long double>(b - a))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    std::vector<cld> z;
    z.reserve(d);
    const long double sigma = 0.7L;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const std::size_t i = hull[h], j = hull[h + 1];
        const long double r = std::exp((lg[i] - lg[j]) / static_cast<long double>(j - i));
        const std::size_t cnt = j - i;
        for (std::size_t t = 0; t < cnt; ++t) {
            const long double ang = two_pi * (static_cast<long double>(t) / cnt) + two_pi * h / d + sigma;
            z.push_back(std::polar(r, ang));
        }
    }
    // Zero roots carried by vanishing low coefficients.
    while (z.size() < d) z.push_back(cld(0, 0));
    return z;
}

} // namespace detail

/// All complex roots of sum c_i x^i (c_d != 0) by Aberth-Ehrlich iteration from a
/// Newton-polygon start, with Newton polishing. Throws NumericError if some root's
/// backward error stays above `tolerance`.
inline RootResult polynomial_roots(std::vector<long double> c, long double tolerance = 1e-12L, int max_iter = 1000) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() < 2) throw DomainError("root finding needs degree >= 1");
    const std::size_t d = c.size() - 1;
    const long double lead = c[d];
    for (auto& v : c) v /= lead;

    std::size_t zeros = 0;
    while (c[zeros] == 0) ++zeros;
    std::vector<long double> core(c.begin() + static_cast<long>(zeros), c.end());
    const std::size_t dc = core.size() - 1;

    RootResult res;
    std::vector<cld> z;
    if (dc > 0) {
        z = detail::newton_polygon_start(core);
        std::vector<bool> done(dc, false);
        const long double eps = 4 * std::numeric_limits<long double>::epsilon();
        int it = 0;
        std::size_t remaining = dc;
        for (; it < max_iter && remaining > 0; ++it) {
            for (std::size_t k = 0; k < dc; ++k) {
                if (done[k]) continue;
                const auto nd = detail::newton_data(core, z[k]);
                cld s = 0;
                for (std::size_t j = 0; j < dc; ++j)
                    if (j != k) s += 1.0L / (z[k] - z[j]);
                const cld w = nd.ratio / (1.0L - nd.ratio * s);
                z[k] -= w;
                if (std::abs(w) <= eps * std::abs(z[k]) || nd.backward_error <= eps) {
                    done[k] = true;
                    --remaining;
                }
            }
        }
        res.iterations = it;
        for (auto& zk : z) {
            for (int polish = 0; polish < 3; ++polish) {
                const auto nd = detail::newton_data(core, zk);
                const cld cand = zk - nd.ratio;
                if (detail::newton_data(core, cand).backward_error < nd.backward_error)
                    zk = cand;
                else
                    break;
            }
            const long double be = detail::newton_data(core, zk).backward_error;
            res.max_backward_error = std::max(res.max_backward_error, be);
        }
    }
    for (std::size_t i = 0; i < zeros; ++i) z.push_back(cld(0, 0));
    res.roots = std::move(z);
    if (!(res.max_backward_error <= tolerance))
        throw NumericError("root finder: backward error " + std::to_string(static_cast<double>(res.max_backward_error)) +
                           " exceeds " + std::to_string(static_cast<double>(tolerance)) + " (degree " +
                           std::to_string(d) + ", " + std::to_string(res.iterations) + " iterations)");
    return res;
}

namespace detail {

struct MpComplex {
    mpf_class re, im;
};

// Newton step p(z)/p'(z) at `bits` precision, with the backward error of z.
inline MpComplex mp_newton(const std::vector<mpf_class>& coef, const std::vector<mpf_class>& abs_coef,
                           const MpComplex& z, mp_bitcnt_t bits, long double* backward_error) {
    const std::size_t d = coef.size() - 1;
    mpf_class pr(coef[d], bits), pi(0, bits), dr(0, bits), di(0, bits), t(0, bits);
    mpf_class az(sqrt(z.re * z.re + z.im * z.im), bits), mag(abs_coef[d], bits);
    for (std::size_t i = d; i-- > 0;) {
        // dp = dp * z + p
        t = dr * z.re - di * z.im + pr;
        di = dr * z.im + di * z.re + pi;
        dr = t;
        // p = p * z + c_i
        t = pr * z.re - pi * z.im + coef[i];
        pi = pr * z.im + pi * z.re;
        pr = t;
        mag = mag * az + abs_coef[i];
    }
    if (backward_error) {
        const mpf_class pabs(sqrt(pr * pr + pi * pi), bits);
        *backward_error = mag == 0 ? 0.0L : static_cast<long double>(mpf_class(pabs / mag).get_d());
    }
    const mpf_class den(dr * dr + di * di, bits);
    if (den == 0) throw NumericError("root refinement hit a critical point");
    return {mpf_class((pr * dr + pi * di) / den, bits), mpf_class((pi * dr - pr * di) / den, bits)};
}

inline cld to_cld(const MpComplex& z) {
    long exp_re = 0, exp_im = 0;
    const double mr = mpf_get_d_2exp(&exp_re, z.re.get_mpf_t());
    const double mi = mpf_get_d_2exp(&exp_im, z.im.get_mpf_t());
    return {std::ldexp(static_cast<long double>(mr), static_cast<int>(exp_re)),
            std::ldexp(static_cast<long double>(mi), static_cast<int>(exp_im))};
}

// Root condition number sum|c_i||z|^i / (|z| |p'(z)|), evaluated in long double.
inline long double root_condition(const std::vector<long double>& c, cld z) {
    const std::size_t d = c.size() - 1;
    const long double az = std::abs(z);
    if (az <= 1.0L) {
        cld p = c[d], dp = 0;
        long double mag = std::abs(c[d]);
        for (std::size_t i = d; i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
            mag = mag * az + std::abs(c[i]);
        }
        return mag / std::max(az * std::abs(dp), std::numeric_limits<long double>::min());
    }
    const cld w = 1.0L / z;
    const long double aw = std::abs(w);
    cld q = c[0], dq = 0;
    long double mag = std::abs(c[0]);
    for (std::size_t i = 1; i <= d; ++i) {
        dq = dq * w + q;
        q = q * w + c[i];
        mag = mag * aw + std::abs(c[i]);
    }
    // |z p'(z)| / z^d = |d q(w) - w q'(w)|
    return mag / std::max(std::abs(static_cast<long double>(d) * q - w * dq), std::numeric_limits<long double>::min());
}

} // namespace detail

/// Roots of an integer polynomial accurate beyond long double: a long double Aberth pass,
/// then Aberth sweeps with the Newton quotient in GMP floating point at a precision
/// chosen from the estimated root condition numbers. Throws NumericError if the final
/// relative Newton step or backward error exceeds `tolerance`.
inline RootResult integer_polynomial_roots(const ZPoly& f, long double tolerance = 1e-12L, int max_sweeps = 200) {
    if (f.degree() < 1) throw DomainError("root finding needs degree >= 1");
    std::vector<long double> c;
    for (const auto& v : f.coeffs()) c.push_back(to_long_double(v));
    RootResult res = polynomial_roots(c, 1.0L);
    const std::size_t d = res.roots.size();

    long double kappa = 1;
    for (const auto& z : res.roots) kappa = std::max(kappa, detail::root_condition(c, z));
    mp_bitcnt_t bits = 128 + static_cast<mp_bitcnt_t>(std::ceil(std::log2(kappa)));

    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<mpf_class> coef, abs_coef;
        for (const auto& v : f.coeffs()) {
            coef.emplace_back(mpf_class(v, bits));
            abs_coef.emplace_back(mpf_class(abs(v), bits));
        }
        std::vector<detail::MpComplex> z(d);
        for (std::size_t k = 0; k < d; ++k)
            z[k] = {mpf_class(static_cast<double>(res.roots[k].real()), bits),
                    mpf_class(static_cast<double>(res.roots[k].imag()), bits)};
        std::vector<cld> zl(res.roots);
        std::vector<bool> done(d, false);
        const long double step_tol = std::ldexp(1.0L, -static_cast<int>(bits) / 2);
        int sweep = 0;
        std::size_t remaining = d;
        for (; sweep < max_sweeps && remaining > 0; ++sweep) {
            for (std::size_t k = 0; k < d; ++k) {
                if (done[k]) continue;
                const detail::MpComplex nm = detail::mp_newton(coef, abs_coef, z[k], bits, nullptr);
                const cld n_ld = detail::to_cld(nm);
                cld s = 0;
                for (std::size_t j = 0; j < d; ++j)
                    if (j != k) s += 1.0L / (zl[k] - zl[j]);
                const cld denom = 1.0L - n_ld * s;
                // w = N / denom, with N in full precision
                const long double dn = std::norm(denom);
                const mpf_class ur(static_cast<double>(denom.real() / dn), bits);
                const mpf_class ui(static_cast<double>(-denom.imag() / dn), bits);
                z[k].re -= nm.re * ur - nm.im * ui;
                z[k].im -= nm.re * ui + nm.im * ur;
                zl[k] = detail::to_cld(z[k]);
                if (std::abs(n_ld) <= step_tol * std::max(std::abs(zl[k]), 1e-300L)) {
                    done[k] = true;
                    --remaining;
                }
            }
        }
        long double worst_step = 0, worst_backward = 0, new_kappa = 1;
        for (std::size_t k = 0; k < d; ++k) {
            long double be = 0;
            const cld step = detail::to_cld(detail::mp_newton(coef, abs_coef, z[k], bits, &be));
            worst_step = std::max(worst_step, std::abs(step) / std::max(std::abs(zl[k]), 1e-300L));
            worst_backward = std::max(worst_backward, be);
            new_kappa = std::max(new_kappa, detail::root_condition(c, zl[k]));
        }
        const mp_bitcnt_t needed = 128 + static_cast<mp_bitcnt_t>(std::ceil(std::log2(new_kappa)));
        if (remaining == 0 && needed <= bits && worst_step <= tolerance && worst_backward <= tolerance) {
            res.roots = std::move(zl);
            res.iterations += sweep;
            res.max_backward_error = worst_backward;
            return res;
        }
        bits = std::max(needed, 2 * bits);
        res.roots = zl;
    }
    throw NumericError("root refinement did not reach tolerance (degree " + std::to_string(d) + ", " +
                       std::to_string(bits) + " bits)");
}

inline std::vector<long double> to_long_double_coeffs(const ZPoly& f) {
    std::vector<long double> out;
    out.reserve(f.size());
    for (const auto& v : f.coeffs()) out.push_back(to_long_double(v));
    return out;
}

} // namespace halfdisc
