#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "halfdisc/exact/errors.hpp"

namespace halfdisc {

using Integer = mpz_class;

inline Integer integer_from_string(const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return z;
}

inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline bool is_prime(const Integer& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

inline void require_prime(const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + to_string(p));
}

/// Exponent of p in z; z nonzero, p prime.
inline long valuation(const Integer& z, const Integer& p) {
    if (z == 0) throw DomainError("valuation of zero undefined");
    require_prime(p);
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Quotient rounded toward minus infinity; d != 0.
inline Integer floor_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Integer igcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Natural log of |z| for z of any size.
inline long double log_abs(const Integer& z) {
    if (z == 0) throw DomainError("log of zero");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) +
           static_cast<long double>(exp2) * std::log(2.0L);
}

/// Nearest long double (top 64 bits), valid beyond the double exponent range.
inline long double to_long_double(const Integer& z) {
    if (z == 0) return 0.0L;
    const long bits = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
    const long drop = bits > 64 ? bits - 64 : 0;
    Integer top;
    mpz_abs(top.get_mpz_t(), z.get_mpz_t());
    if (drop > 0) mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
    const long double r =
        std::ldexp(static_cast<long double>(mpz_get_ui(top.get_mpz_t())), static_cast<int>(drop));
    return z < 0 ? -r : r;
}

/// |z| in decimal digits.
inline std::size_t decimal_digits(const Integer& z) {
    if (z == 0) return 1;
    return Integer(abs(z)).get_str(10).size();
}

} // namespace halfdisc
