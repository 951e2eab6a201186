#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "halfdisc/exact/integer.hpp"

namespace halfdisc {

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

struct Factorization {
    std::vector<std::pair<Integer, long>> factors;  // ascending primes
    Integer cofactor = 1;                           // unfactored remainder, >= 1
    bool complete() const { return cofactor == 1; }
};

/// Strip the given primes, then trial-divide up to `bound`; a leftover probable prime
/// is accepted as a factor, anything else stays in the cofactor.
inline Factorization factor_partial(const Integer& value, std::vector<Integer> extra_primes = {},
                                    std::uint32_t bound = 100000) {
    if (value == 0) throw DomainError("cannot factor zero");
    Integer rest = abs(value);
    std::vector<std::pair<Integer, long>> found;
    auto strip = [&](const Integer& p) {
        if (rest == 1 || p < 2) return;
        Integer q;
        const auto e = mpz_remove(q.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        if (e > 0) {
            found.emplace_back(p, static_cast<long>(e));
            rest = q;
        }
    };
    for (const auto p : primes_up_to(bound)) {
        if (rest == 1) break;
        strip(Integer(static_cast<unsigned long>(p)));
    }
    for (const auto& p : extra_primes) {
        if (is_prime(p)) strip(p);
    }
    if (rest > 1 && is_prime(rest)) {
        found.emplace_back(rest, 1);
        rest = 1;
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return {std::move(found), rest};
}

/// Prime divisors of a nonzero integer small enough for trial division plus a prime cofactor.
inline std::vector<Integer> prime_divisors(const Integer& value, std::uint32_t bound = 1000000) {
    const Factorization f = factor_partial(value, {}, bound);
    std::vector<Integer> out;
    for (const auto& [p, e] : f.factors) out.push_back(p);
    if (!f.complete()) throw DomainError("could not factor " + to_string(value) + " completely");
    return out;
}

} // namespace halfdisc
