#pragma once

#include <utility>

#include "halfdisc/exact/poly.hpp"

namespace halfdisc {

namespace detail {

/// Sylvester resultant Res(A, B) = lc(A)^deg B * prod B(roots of A), by the
/// subresultant PRS over Z (Collins / Brown-Traub with content removal).
inline Integer sylvester_resultant(ZPoly A, ZPoly B) {
    if (A.is_zero() || B.is_zero()) throw DomainError("resultant with the zero polynomial");
    long da = A.degree().value();
    long db = B.degree().value();
    if (da == 0) return ipow(A.lc(), static_cast<unsigned long>(db));
    if (db == 0) return ipow(B.lc(), static_cast<unsigned long>(da));

    auto ca = content_primitive(A);
    auto cb = content_primitive(B);
    // Signs stay inside the primitive parts so A = ca.content * A', B = cb.content * B'.
    A = ca.sign < 0 ? -ca.primitive : ca.primitive;
    B = cb.sign < 0 ? -cb.primitive : cb.primitive;
    const Integer t = ipow(ca.content, static_cast<unsigned long>(db)) * ipow(cb.content, static_cast<unsigned long>(da));

    int s = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) s = -s;
    }
    Integer g = 1;
    Integer h = 1;
    while (true) {
        const long delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        ZPoly R = A.prem(B);
        if (R.is_zero()) return 0;
        A = std::move(B);
        // B <- R / (g * h^delta)
        const Integer div = g * ipow(h, static_cast<unsigned long>(delta));
        B = R.exact_div(div);
        g = A.lc();
        // h <- h^(1 - delta) * g^delta
        if (delta == 0) {
            // unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Integer num = ipow(g, static_cast<unsigned long>(delta));
            Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        da = A.degree().value();
        db = B.degree().value();
        if (db == 0) break;
    }
    // h <- h^(1 - deg A) * lc(B)^deg A
    Integer num = ipow(B.lc(), static_cast<unsigned long>(da));
    Integer res;
    if (da == 0) {
        res = num * h;
    } else {
        Integer den = ipow(h, static_cast<unsigned long>(da - 1));
        mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return s * t * res;
}

} // namespace detail

/// resultant(f, g) = lc(g)^deg f * prod_{g(b)=0} f(b), which is the Sylvester
/// resultant Res(g, f). With this orientation resultant(g, x - a) = g(a) and
/// resultant(f, c) = c^deg f for a constant c.
inline Integer resultant(const ZPoly& f, const ZPoly& g) { return detail::sylvester_resultant(g, f); }

inline Rational resultant(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
    auto [zf, df] = clear_denominators(f);
    auto [zg, dg] = clear_denominators(g);
    const Integer r = resultant(zf, zg);
    const auto ef = static_cast<unsigned long>(f.degree().value());
    const auto eg = static_cast<unsigned long>(g.degree().value());
    return Rational(r, ipow(df, eg) * ipow(dg, ef));
}

/// Discriminant with the sign convention disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f).
inline Integer discriminant(const ZPoly& f) {
    const long d = f.degree().value();
    if (d < 1) throw DomainError("discriminant of a constant");
    Integer r = detail::sylvester_resultant(f, f.derivative());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    return ((d * (d - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

} // namespace halfdisc
