#pragma once

#include <concepts>
#include <cstdint>
#include <algorithm>
#include <map>
#include <utility>
#include <stdexcept>
#include <vector>

#include "halfdisc/curve/curve.hpp"
#include "halfdisc/exact/mod_poly.hpp"
#include "halfdisc/exact/quotient_ring.hpp"

namespace halfdisc {

// Division polynomials of y^2 = P(x) with y eliminated: for odd n, psi_n = f_n(x);
// for even n, psi_n = y * g_n(x) (so g_2 = 2). Any product of two y's becomes P(x).
// The recursion only needs, from the coefficient ring, ring operations, exact halving and
// multiplication by P(x)^2; the rings below provide Z[x], (Z/m)[x] and Z[x]/(cubic).

template <class R>
concept DivisionRing = requires(const R& ring, const typename R::Elem& u, const std::vector<Integer>& coeffs) {
    { ring.embed(coeffs) } -> std::same_as<typename R::Elem>;
    { ring.mul(u, u) } -> std::same_as<typename R::Elem>;
    { ring.sub(u, u) } -> std::same_as<typename R::Elem>;
    { ring.times_p_squared(u) } -> std::same_as<typename R::Elem>;
    { ring.halve(u) } -> std::same_as<typename R::Elem>;
};

/// Z[x], full polynomials.
class IntegerXRing {
public:
    using Elem = ZPoly;
    explicit IntegerXRing(const Curve& curve) : p2_(curve.poly() * curve.poly()) {}

    Elem embed(const std::vector<Integer>& c) const { return ZPoly(c); }
    Elem mul(const Elem& u, const Elem& v) const { return u * v; }
    Elem sub(const Elem& u, const Elem& v) const { return u - v; }
    Elem times_p_squared(const Elem& u) const { return p2_ * u; }
    Elem halve(const Elem& u) const { return u.exact_div(Integer(2)); }

private:
    ZPoly p2_;
};

/// (Z/m)[x] with m odd, full polynomials.
class ModularXRing {
public:
    using Elem = ModPoly;
    ModularXRing(const Curve& curve, std::uint64_t modulus)
        : m_(modulus), p2_(ModPoly::from_integer_poly(curve.poly() * curve.poly(), modulus)),
          inv2_(mod_inverse(2, modulus)) {
        if (modulus % 2 == 0) throw std::invalid_argument("ModularXRing needs an odd modulus");
    }

    Elem embed(const std::vector<Integer>& c) const { return ModPoly::from_integer_poly(ZPoly(c), m_); }
    Elem mul(const Elem& u, const Elem& v) const { return u * v; }
    Elem sub(const Elem& u, const Elem& v) const { return u - v; }
    Elem times_p_squared(const Elem& u) const { return p2_ * u; }
    Elem halve(const Elem& u) const { return u.scaled(inv2_); }
    std::uint64_t modulus() const { return m_; }

private:
    std::uint64_t m_;
    ModPoly p2_;
    std::uint64_t inv2_;
};

/// Z[x]/(m) for a monic cubic m; never materialises a polynomial of degree > 2.
class QuotientXRing {
public:
    using Elem = QuotientElem<Integer>;
    QuotientXRing(const Curve& curve, const CubicModulus<Integer>& modulus)
        : m_(modulus), p2_(Elem::from_poly(curve.poly() * curve.poly(), modulus)),
          p_is_modulus_(modulus.poly() == curve.poly()) {}

    Elem embed(const std::vector<Integer>& c) const { return Elem::from_poly(ZPoly(c), m_); }
    Elem mul(const Elem& u, const Elem& v) const { return u * v; }
    Elem sub(const Elem& u, const Elem& v) const { return u - v; }
    Elem times_p_squared(const Elem& u) const { return p_is_modulus_ ? Elem::zero(m_) : p2_ * u; }
    // Z[x] -> Z[x]/(m) commutes with exact division by 2 since m is monic.
    Elem halve(const Elem& u) const { return u.exact_div(Integer(2)); }
    const CubicModulus<Integer>& modulus() const { return m_; }

private:
    CubicModulus<Integer> m_;
    Elem p2_;
    bool p_is_modulus_;
};

/// Memoised psi_n (odd) / psi_n / y (even) over a DivisionRing, computed top-down with
/// the doubling recurrences so only O(log n) indices are ever built.
template <DivisionRing Ring>
class DivisionPolynomials {
public:
    using Elem = typename Ring::Elem;

    DivisionPolynomials(const Curve& curve, Ring ring) : ring_(std::move(ring)) {
        const Integer b2 = curve.b2(), b4 = curve.b4(), b6 = curve.b6(), b8 = curve.b8();
        memo_.emplace(1, ring_.embed({Integer(1)}));
        memo_.emplace(2, ring_.embed({Integer(2)}));
        memo_.emplace(3, ring_.embed({b8, 3 * b6, 3 * b4, b2, Integer(3)}));
        memo_.emplace(4, ring_.embed({Integer(2 * (b4 * b8 - b6 * b6)), Integer(2 * (b2 * b8 - b4 * b6)),
                                      Integer(20 * b8), Integer(20 * b6), Integer(10 * b4), Integer(2 * b2),
                                      Integer(4)}));
    }

    const Ring& ring() const { return ring_; }

    /// f_n for odd n, g_n for even n (n >= 1).
    const Elem& get(long n) {
        if (n < 1) throw std::invalid_argument("division polynomial index must be positive");
        if (auto it = memo_.find(n); it != memo_.end()) return it->second;
        const long m = n / 2;
        Elem value = (n % 2 != 0) ? odd_step(m) : even_step(m);
        return memo_.emplace(n, std::move(value)).first->second;
    }

    std::size_t cached() const { return memo_.size(); }

private:
    Elem cube(const Elem& u) { return ring_.mul(ring_.mul(u, u), u); }
    Elem square(const Elem& u) { return ring_.mul(u, u); }

    // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
    Elem odd_step(long m) {
        if (m % 2 == 0) {
            // even m: the first product carries y^4 = P^2
            Elem first = ring_.times_p_squared(ring_.mul(get(m + 2), cube(get(m))));
            return ring_.sub(first, ring_.mul(get(m - 1), cube(get(m + 1))));
        }
        Elem second = ring_.times_p_squared(ring_.mul(get(m - 1), cube(get(m + 1))));
        return ring_.sub(ring_.mul(get(m + 2), cube(get(m))), second);
    }

    // psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / (2y)
    Elem even_step(long m) {
        Elem inner = ring_.sub(ring_.mul(get(m + 2), square(get(m - 1))), ring_.mul(get(m - 2), square(get(m + 1))));
        return ring_.halve(ring_.mul(get(m), inner));
    }

    Ring ring_;
    std::map<long, Elem> memo_;
};

/// psi_n as an integer polynomial in x (odd n), or psi_n / y (even n).
inline ZPoly division_polynomial(const Curve& curve, long n) {
    if (n < 1) throw std::invalid_argument("division polynomial index must be positive");
    DivisionPolynomials<IntegerXRing> table(curve, IntegerXRing(curve));
    return table.get(n);
}

/// psi_n (x-part) mod a prime or prime power m.
inline ModPoly division_polynomial_mod(const Curve& curve, long n, std::uint64_t m) {
    DivisionPolynomials<ModularXRing> table(curve, ModularXRing(curve, m));
    return table.get(n);
}

/// Content of the x-part of psi_n. It divides lc = n, so only primes p | n occur; odd p
/// are handled in (Z/p^{e+1})[x] for p^e || n. Even n take the 2-part from the full
/// integer polynomial, since halving is not available modulo powers of 2.
inline Integer division_polynomial_content(const Curve& curve, long n) {
    if (n < 1) throw std::invalid_argument("division polynomial index must be positive");
    Integer content = 1;
    long rest = n;
    std::vector<std::pair<long, long>> prime_powers;
    for (long p = 2; p * p <= rest; ++p) {
        long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) prime_powers.emplace_back(p, e);
    }
    if (rest > 1) prime_powers.emplace_back(rest, 1);

    for (const auto& [p, e] : prime_powers) {
        if (p == 2) {
            const ZPoly full = division_polynomial(curve, n);
            content *= ipow(Integer(2), static_cast<unsigned long>(
                                            valuation(content_primitive(full).content, Integer(2))));
            continue;
        }
        std::uint64_t modulus = 1;
        for (long i = 0; i <= e; ++i) modulus *= static_cast<std::uint64_t>(p);
        const ModPoly f = division_polynomial_mod(curve, n, modulus);
        long vmin = e + 1;
        for (const auto c : f.coeffs()) {
            if (c == 0) continue;
            long v = 0;
            for (std::uint64_t t = c; t % static_cast<std::uint64_t>(p) == 0; t /= static_cast<std::uint64_t>(p)) ++v;
            vmin = std::min(vmin, v);
        }
        content *= ipow(Integer(p), static_cast<unsigned long>(vmin));
    }
    return content;
}

} // namespace halfdisc
