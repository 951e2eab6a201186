#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfdisc/exact/rational.hpp"

namespace halfdisc {

/// Multiplicities of the exceptional divisors F_1..F_k in the pullback of D.
struct MultiplicityLedger {
    long k = 0;
    std::vector<long> m;  // m[j-1] is the multiplicity of F_j

    long total() const { return std::accumulate(m.begin(), m.end(), 0L); }
};

inline MultiplicityLedger multiplicity_ledger(long k) {
    if (k < 1) throw std::invalid_argument("multiplicity ledger needs k >= 1");
    MultiplicityLedger led{k, {2}};
    for (long j = 2; j <= k; ++j) led.m.push_back(led.m.back() + 2);
    return led;
}

namespace detail {

inline long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline void require_odd_positive(long n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("n must be a positive odd integer");
}

} // namespace detail

/// |{m in Z : (j-1)n <= 2km <= jn}|, closed at both ends.
inline long component_count(long j, long n, long k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (j < 1 || j > k - 1)
        throw std::invalid_argument("j = " + std::to_string(j) + " outside 1.." + std::to_string(k - 1));
    detail::require_odd_positive(n);
    return detail::floor_div(j * n, 2 * k) - detail::ceil_div((j - 1) * n, 2 * k) + 1;
}

struct FiberPrediction {
    long n = 0;
    long k = 0;
    long r = 0;          // n mod 2k
    long gcd_m = 1;      // gcd(n, 2k)
    long main_term = 0;  // (n - r) n k
    long envelope = 0;   // k(k-1) 2n coprime, k(k-1) 2k in packets

    Rational limit_ratio() const { return Rational(Integer(main_term), Integer(n) * n); }
    Rational limit_error() const { return (limit_ratio() - Rational(k)).abs(); }
};

inline FiberPrediction predicted_intersection(long n, long k) {
    detail::require_odd_positive(n);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    FiberPrediction f;
    f.n = n;
    f.k = k;
    f.r = n % (2 * k);
    f.gcd_m = std::gcd(n, 2 * k);
    f.main_term = (n - f.r) * n * k;
    f.envelope = f.gcd_m == 1 ? k * (k - 1) * 2 * n : k * (k - 1) * 2 * k;
    return f;
}

/// Compares an exact value with mainTerm +- (envelope + 2kn).
struct Containment {
    long exact = 0;
    long lower = 0;
    long upper = 0;
    bool inside() const { return lower <= exact && exact <= upper; }
};

inline Containment containment(const FiberPrediction& f, long exact) {
    const long width = f.envelope + 2 * f.k * f.n;
    return {exact, f.main_term - width, f.main_term + width};
}

/// Special fiber after base change of ramification n: a cycle of 2kn lines; the
/// n-torsion closure meets the components with index divisible by 2k, each with multiplicity n.
struct FiberCycle {
    long k = 0;
    long n = 0;
    long component_count = 0;
    std::vector<long> marked;
    long mark_multiplicity = 0;

    long total_marked_multiplicity() const { return static_cast<long>(marked.size()) * mark_multiplicity; }
    long index(long i) const { return ((i % component_count) + component_count) % component_count; }
};

inline FiberCycle fiber_cycle(long n, long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("fiber cycle needs n, k >= 1");
    FiberCycle c{k, n, 2 * k * n, {}, n};
    for (long i = 0; i < c.component_count; i += 2 * k) c.marked.push_back(i);
    return c;
}

} // namespace halfdisc
