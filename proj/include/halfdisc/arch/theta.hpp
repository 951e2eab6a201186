#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "halfdisc/arch/periods.hpp"

namespace halfdisc {

/// Jacobi theta functions for the reduced lattice of a PeriodData, with
/// argument xi = pi z / w1 and nome q = exp(i pi tau).
template <class F>
class ThetaLattice {
public:
    using C = std::complex<F>;

    explicit ThetaLattice(const PeriodData& pd)
        : w1_(C(static_cast<F>(pd.w1.real()), static_cast<F>(pd.w1.imag()))),
          tau_(C(static_cast<F>(pd.tau.real()), static_cast<F>(pd.tau.imag()))) {
        const F pi = std::numbers::pi_v<F>;
        const C i_pi_tau = C(0, pi) * tau_;
        for (int n = 0; n < kTerms; ++n) {
            const F h = static_cast<F>(n) + F(0.5);
            qh_[n] = std::exp(i_pi_tau * (h * h));
            qi_[n] = std::exp(i_pi_tau * static_cast<F>((n + 1) * (n + 1)));
        }
        const auto t0 = values(C(0));
        // theta_1 vanishes at 0; theta_1'(0) = pi theta_2 theta_3 theta_4 is not needed.
        t2_0_ = t0[1];
        t3_0_ = t0[2];
        t4_0_ = t0[3];
        const C scale = C(pi) / w1_;
        scale2_ = scale * scale;
        log_const_ = 6 * std::log(std::abs(scale)) + 4 * std::log(std::abs(t2_0_ * t3_0_ * t4_0_));
        const C t34 = t3_0_ * t3_0_ * t3_0_ * t3_0_, t44 = t4_0_ * t4_0_ * t4_0_ * t4_0_;
        e1_ = scale2_ * (t34 + t44) / F(3);
    }

    /// theta_1..theta_4 at xi.
    std::array<C, 4> values(C xi) const {
        const C w = std::exp(C(0, 1) * xi);
        const C winv = F(1) / w;
        const C w2 = w * w, w2inv = winv * winv;
        C odd_pos = w, odd_neg = winv;      // w^{+-(2n+1)}
        C even_pos = w2, even_neg = w2inv;  // w^{+-2(n+1)}
        C t1 = 0, t2 = 0, t3 = 1, t4 = 1;
        for (int n = 0; n < kTerms; ++n) {
            const F sgn = (n % 2 == 0) ? F(1) : F(-1);
            const C s = (odd_pos - odd_neg) / C(0, 1);  // 2 sin((2n+1) xi)
            const C c = odd_pos + odd_neg;              // 2 cos((2n+1) xi)
            t1 += sgn * qh_[n] * s;
            t2 += qh_[n] * c;
            const C c2 = even_pos + even_neg;           // 2 cos(2(n+1) xi)
            t3 += qi_[n] * c2;
            t4 += -sgn * qi_[n] * c2;
            odd_pos *= w2;
            odd_neg *= w2inv;
            even_pos *= w2;
            even_neg *= w2inv;
            if (std::abs(qh_[n]) * std::abs(odd_pos) < std::numeric_limits<F>::epsilon() * F(1e-3) &&
                std::abs(qh_[n]) * std::abs(odd_neg) < std::numeric_limits<F>::epsilon() * F(1e-3))
                break;
        }
        return {t1, t2, t3, t4};
    }

    /// Reduces z into the centred parallelogram spanned by (w1, w2); returns (s, t) with z = s w1 + t w2.
    std::pair<F, F> coordinates(C z) const {
        const C u = z / w1_;
        const F t = u.imag() / tau_.imag();
        const F s = u.real() - t * tau_.real();
        return {s, t};
    }

    C reduce(C z) const {
        auto [s, t] = coordinates(z);
        s -= std::nearbyint(s);
        t -= std::nearbyint(t);
        return s * w1_ + t * w1_ * tau_;
    }

    C wp(C z) const {
        const C zr = reduce(z);
        const auto t = values(std::numbers::pi_v<F> * zr / w1_);
        const C r = t3_0_ * t4_0_ * t[1] / t[0];
        return e1_ + scale2_ * r * r;
    }

    /// log|P(x)| at x = wp(z) - a/3, as the log of prod (wp - e_i).
    F log_abs_p(C z) const {
        const C zr = reduce(z);
        const auto t = values(std::numbers::pi_v<F> * zr / w1_);
        return log_const_ + 2 * std::log(std::abs(t[1] * t[2] * t[3])) - 6 * std::log(std::abs(t[0]));
    }

    const C& w1() const { return w1_; }
    C w2() const { return w1_ * tau_; }

private:
    static constexpr int kTerms = 12;
    C w1_, tau_;
    std::array<C, kTerms> qh_{}, qi_{};
    C t2_0_, t3_0_, t4_0_, scale2_, e1_;
    F log_const_ = 0;
};

/// Largest relative mismatch between wp at the three half periods and the e_i.
inline long double half_period_mismatch(const PeriodData& pd) {
    const ThetaLattice<long double> th(pd);
    const std::array<cld, 3> half{pd.w1 / 2.0L, pd.w2 / 2.0L, (pd.w1 + pd.w2) / 2.0L};
    long double scale = 0;
    for (const auto& e : pd.shifted_roots) scale = std::max(scale, std::abs(e));
    scale = std::max(scale, 1.0L);
    long double worst = 0;
    std::array<bool, 3> used{false, false, false};
    for (const auto& h : half) {
        const cld v = th.wp(h);
        int best = -1;
        long double dist = 0;
        for (int i = 0; i < 3; ++i) {
            if (used[i]) continue;
            const long double dd = std::abs(v - pd.shifted_roots[i]);
            if (best < 0 || dd < dist) {
                best = i;
                dist = dd;
            }
        }
        used[best] = true;
        worst = std::max(worst, dist / scale);
    }
    return worst;
}

} // namespace halfdisc
