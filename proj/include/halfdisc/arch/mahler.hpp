#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "halfdisc/arch/theta.hpp"
#include "halfdisc/util/parallel.hpp"

namespace halfdisc {

struct MahlerResult {
    double value = 0;
    double refinement_delta = 0;  // |estimate(m x m) - estimate(m/2 x m/2)|
    double coarse_value = 0;
    long grid = 0;                // m, so m^2 points before exclusion
    long excluded = 0;
    std::uint64_t seed = 0;
    double shift_s = 0, shift_t = 0;
};

struct MahlerOptions {
    double epsilon = 1e-3;        // exclusion radius relative to |w1|
    BasisChange basis;            // sampling parallelogram in terms of the reduced basis
    unsigned threads = 0;         // 0: HALFDISC_THREADS / hardware
};

namespace detail {

inline double unit_double(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

struct GridSum {
    long double sum = 0;
    long count = 0;
};

inline GridSum grid_average(const ThetaLattice<double>& th, std::complex<double> v1, std::complex<double> v2,
                            long m, double us, double ut, double eps_abs, unsigned threads) {
    using C = std::complex<double>;
    const C w1 = th.w1(), w2 = th.w2();
    std::vector<GridSum> rows(static_cast<std::size_t>(m));
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t j) {
        KahanSum acc;
        long count = 0;
        const double t = (static_cast<double>(j) + ut) / static_cast<double>(m);
        for (long i = 0; i < m; ++i) {
            const double s = (static_cast<double>(i) + us) / static_cast<double>(m);
            const C z = th.reduce(s * v1 + t * v2);
            // distance to the half lattice, nearest of the 9 rounded candidates
            const auto [zs, zt] = th.coordinates(z);
            const double rs = std::nearbyint(2 * zs), rt = std::nearbyint(2 * zt);
            bool near = false;
            for (int di = -1; di <= 1 && !near; ++di)
                for (int dj = -1; dj <= 1 && !near; ++dj) {
                    const C cpt = ((rs + di) * w1 + (rt + dj) * w2) / 2.0;
                    if (std::abs(z - cpt) < eps_abs) near = true;
                }
            if (near) continue;
            acc.add(th.log_abs_p(z));
            ++count;
        }
        rows[j] = {acc.value(), count};
    }, threads == 0 ? thread_count() : threads);
    GridSum total;
    KahanSum acc;
    for (const auto& r : rows) {
        acc.add(r.sum);
        total.count += r.count;
    }
    total.sum = acc.value();
    return total;
}

} // namespace detail

/// Haar probability average of log|P(wp(z))| over C/Lambda, on a seeded shifted
/// m x m grid (m = floor(sqrt(samples))), skipping eps-disks around the half lattice.
inline MahlerResult mahler_integral(const PeriodData& pd, long samples, std::uint64_t seed,
                                    const MahlerOptions& opts = {}) {
    if (samples < 10000) throw std::invalid_argument("mahler_integral needs samples >= 10000");
    const BasisChange& bc = opts.basis;
    if (bc.a * bc.d - bc.b * bc.c != 1 && bc.a * bc.d - bc.b * bc.c != -1)
        throw std::invalid_argument("basis change must be unimodular");
    const ThetaLattice<double> th(pd);
    const std::complex<double> w1 = th.w1(), w2 = th.w2();
    const std::complex<double> v1 = static_cast<double>(bc.a) * w1 + static_cast<double>(bc.b) * w2;
    const std::complex<double> v2 = static_cast<double>(bc.c) * w1 + static_cast<double>(bc.d) * w2;

    MahlerResult res;
    res.seed = seed;
    std::mt19937_64 gen(seed);
    res.shift_s = detail::unit_double(gen);
    res.shift_t = detail::unit_double(gen);
    res.grid = static_cast<long>(std::sqrt(static_cast<double>(samples)));
    while ((res.grid + 1) * (res.grid + 1) <= samples) ++res.grid;
    res.grid -= res.grid % 2;
    const double eps_abs = opts.epsilon * std::abs(w1);

    const auto fine = detail::grid_average(th, v1, v2, res.grid, res.shift_s, res.shift_t, eps_abs, opts.threads);
    const auto coarse = detail::grid_average(th, v1, v2, res.grid / 2, res.shift_s, res.shift_t, eps_abs, opts.threads);
    if (fine.count == 0 || coarse.count == 0) throw NumericError("mahler_integral: every sample excluded");
    res.value = static_cast<double>(fine.sum / fine.count);
    res.coarse_value = static_cast<double>(coarse.sum / coarse.count);
    res.refinement_delta = std::abs(res.value - res.coarse_value);
    res.excluded = res.grid * res.grid - fine.count;
    return res;
}

inline MahlerResult mahler_integral(const Curve& curve, long samples, std::uint64_t seed,
                                    const MahlerOptions& opts = {}) {
    return mahler_integral(periods(curve), samples, seed, opts);
}

} // namespace halfdisc
