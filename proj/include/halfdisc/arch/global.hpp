#pragma once

#include <cmath>
#include <set>
#include <vector>

#include "halfdisc/arch/torsion_sum.hpp"
#include "halfdisc/curve/reduction.hpp"
#include "halfdisc/exact/factor.hpp"
#include "halfdisc/util/parallel.hpp"

namespace halfdisc {

struct GlobalRow {
    long n = 0;
    Integer resultant;                        // resultant(P, h_n)
    std::size_t res_decimal_digits = 0;
    Factorization factorization;
    bool identity_exact = false;              // |Res| = prod p^e * cofactor
    long double log_identity_gap = 0;         // |log|Res| - sum e log p - log cofactor|
    long double sn = 0;                       // exact path
    long double target = 0;                   // 1/2 log|disc P|
    long double abs_error = 0;
    long double lc_correction = 0;            // 6 log lc(h_n) / n^2, already removed from sn
    long double finite_total = 0;             // sum_p (D.H_n)_p log p / n^2 = sn + lc_correction
    long double two_adic_part = 0;            // p = 2 share of finite_total
    long double bad_prime_part = 0;           // odd primes dividing disc P
    long double other_part = 0;               // remaining primes and cofactor
};

struct GlobalReport {
    long double target = 0;
    std::vector<Integer> bad_primes;  // odd
    std::vector<GlobalRow> rows;
};

inline std::vector<Integer> primes_of(long n) {
    std::vector<Integer> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.emplace_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.emplace_back(n);
    return out;
}

inline GlobalReport global_check(const Curve& curve, const std::vector<long>& n_list, std::uint32_t trial_bound = 100000) {
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 3 || n_list[i] % 2 == 0) throw std::invalid_argument("global_check needs odd n >= 3");
        if (i > 0 && n_list[i] <= n_list[i - 1]) throw std::invalid_argument("n list must be strictly ascending");
    }
    GlobalReport rep;
    rep.target = log_abs(curve.disc_p()) / 2;
    const std::vector<Integer> disc_primes = prime_divisors(curve.disc_p());
    for (const auto& p : disc_primes)
        if (p != 2) rep.bad_primes.push_back(p);
    const std::set<Integer> bad(disc_primes.begin(), disc_primes.end());

    TorsionResultants table(curve);
    std::vector<QuotientElem<Integer>> psi;
    for (long n : n_list) psi.push_back(table.psi_mod_p(n));
    rep.rows.resize(n_list.size());
    parallel_for(n_list.size(), [&](std::size_t i) {
        const long n = n_list[i];
        const TorsionResultant r = TorsionResultants::finish(curve, n, psi[i]);
        GlobalRow row;
        row.n = n;
        row.resultant = r.resultant;
        row.res_decimal_digits = decimal_digits(r.resultant);
        std::vector<Integer> extra = disc_primes;
        for (const auto& p : primes_of(2 * n)) extra.push_back(p);
        row.factorization = factor_partial(r.resultant, extra, trial_bound);

        Integer product = row.factorization.cofactor;
        const long double n2 = static_cast<long double>(n) * static_cast<long double>(n);
        KahanSum log_sum, two, badp, other;
        for (const auto& [p, e] : row.factorization.factors) {
            product *= ipow(p, static_cast<unsigned long>(e));
            const long double term = static_cast<long double>(e) * log_abs(p);
            log_sum.add(term);
            if (p == 2)
                two.add(2 * term / n2);
            else if (bad.count(p))
                badp.add(2 * term / n2);
            else
                other.add(2 * term / n2);
        }
        const long double log_cof = log_abs(row.factorization.cofactor);
        log_sum.add(log_cof);
        other.add(2 * log_cof / n2);
        row.identity_exact = product == abs(r.resultant);
        row.log_identity_gap = std::abs(log_abs(r.resultant) - log_sum.value());
        row.sn = torsion_sum_exact(r);
        row.target = rep.target;
        row.abs_error = std::abs(row.sn - rep.target);
        row.lc_correction = 6.0L * log_abs(r.leading_coefficient) / n2;
        row.two_adic_part = two.value();
        row.bad_prime_part = badp.value();
        row.other_part = other.value();
        row.finite_total = row.two_adic_part + row.bad_prime_part + row.other_part;
        rep.rows[i] = std::move(row);
    });
    return rep;
}

} // namespace halfdisc
