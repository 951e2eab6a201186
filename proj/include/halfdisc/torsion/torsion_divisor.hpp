#pragma once

#include <stdexcept>
#include <string>

#include "halfdisc/torsion/division_poly.hpp"

namespace halfdisc {

inline constexpr long kDefaultFullPathLimit = 31;

/// H_n = x_*([n]^{-1}(O) - E[2]) on P^1. Its support is cut out by the primitive
/// integral polynomial h_n; every x-value comes from the two points +-Q, so the
/// divisor is `multiplicity` * div(h_n).
struct TorsionDivisor {
    long n = 0;
    ZPoly h;
    long degree = 0;
    Integer leading_coefficient = 1;
    Integer psi_content = 1;
    int multiplicity = 2;

    long divisor_degree() const { return multiplicity * degree; }
};

struct EvenDegreeCheck {
    long measured = 0;
    long point_count = 0;    // n^2/2 - 2: (n^2 - 4) points of E[n] - E[2], paired by +-
    long printed_count = 0;  // n^2/2 - 3
    bool matches_point_count() const { return measured == point_count; }
    bool matches_printed_count() const { return measured == printed_count; }
};

inline EvenDegreeCheck even_degree_check(const TorsionDivisor& d) {
    if (d.n % 2 != 0) throw std::invalid_argument("even_degree_check needs even n");
    return {d.degree, d.n * d.n / 2 - 2, d.n * d.n / 2 - 3};
}

/// Full-polynomial construction of h_n; only for n up to `full_path_limit`.
inline TorsionDivisor torsion_x_polynomial(const Curve& curve, long n, long full_path_limit = kDefaultFullPathLimit) {
    if (n < 2) throw std::invalid_argument("torsion divisor needs n >= 2");
    if (n > full_path_limit)
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the full-polynomial limit " +
                                    std::to_string(full_path_limit) + "; use the quotient-ring path");
    ZPoly x_part = division_polynomial(curve, n);
    const ContentSplit<Integer> split = content_primitive(x_part);
    ZPoly h = split.primitive;
    if (n % 2 == 0) {
        // psi_n / y already omits the 2-torsion; strip any residual common factor with P.
        const ZPoly common = gcd_primitive(h, curve.poly());
        if (common.degree() > 0) {
            auto [q, r] = to_rational(h).divmod(to_rational(common));
            if (!r.is_zero()) throw DomainError("inexact removal of the 2-torsion factor");
            h = primitive_part(clear_denominators(q).first);
        }
    }
    TorsionDivisor d;
    d.n = n;
    d.degree = h.degree().value();
    d.leading_coefficient = h.lc();
    d.psi_content = split.content;
    d.h = std::move(h);
    if (n % 2 != 0 && d.degree != (n * n - 1) / 2)
        throw DomainError("odd torsion divisor has degree " + std::to_string(d.degree) + ", expected (n^2-1)/2");
    return d;
}

/// h_n mod `modulus` (a monic cubic) by running the recurrences inside Z[x]/(modulus).
inline QuotientElem<Integer> evaluate_h_mod(const Curve& curve, long n, const ZPoly& modulus) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("evaluate_h_mod needs a positive odd n");
    const auto m = CubicModulus<Integer>::from_poly(modulus);
    DivisionPolynomials<QuotientXRing> table(curve, QuotientXRing(curve, m));
    const auto& psi = table.get(n);
    if (n == 1) return psi;
    return psi.exact_div(division_polynomial_content(curve, n));
}

/// Exact resultant(P, h_n) from the quotient ring, plus the normalisation data.
struct TorsionResultant {
    long n = 0;
    Integer resultant;          // resultant(P, h_n) = lc(h_n)^3 prod P(roots of h_n)
    Integer psi_content = 1;
    Integer leading_coefficient = 1;  // lc(h_n) = n / content
    long degree = 0;
};

/// Serves resultant(P, h_n) for many n from one shared table in Z[x]/(P).
class TorsionResultants {
public:
    explicit TorsionResultants(const Curve& curve)
        : curve_(curve), table_(curve, QuotientXRing(curve, CubicModulus<Integer>::from_poly(curve.poly()))) {}

    /// psi_n mod P (x-part); not thread-safe, call before fanning out.
    const QuotientElem<Integer>& psi_mod_p(long n) { return table_.get(n); }

    /// Thread-safe once psi_mod_p(n) has been evaluated.
    static TorsionResultant finish(const Curve& curve, long n, const QuotientElem<Integer>& psi) {
        TorsionResultant r;
        r.n = n;
        if (n == 2) {
            r.resultant = 1;
            r.psi_content = 2;
            r.leading_coefficient = 1;
            r.degree = 0;
            return r;
        }
        r.psi_content = division_polynomial_content(curve, n);
        r.leading_coefficient = Integer(n) / r.psi_content;
        r.degree = n % 2 != 0 ? (n * n - 1) / 2 : (n * n - 4) / 2;
        // resultant(P, h) = Res(h, P) = (-1)^{3 deg h} Res(P, h) = (-1)^{deg h} N(h mod P)
        const Integer norm = psi.norm();
        const Integer c3 = ipow(r.psi_content, 3);
        Integer reduced;
        mpz_divexact(reduced.get_mpz_t(), norm.get_mpz_t(), c3.get_mpz_t());
        r.resultant = (r.degree % 2 == 0) ? reduced : Integer(-reduced);
        return r;
    }

    TorsionResultant get(long n) {
        if (n < 2) throw std::invalid_argument("torsion divisor needs n >= 2");
        return finish(curve_, n, psi_mod_p(n));
    }

    const Curve& curve() const { return curve_; }

private:
    Curve curve_;
    DivisionPolynomials<QuotientXRing> table_;
};

inline TorsionResultant torsion_resultant(const Curve& curve, long n) { return TorsionResultants(curve).get(n); }

} // namespace halfdisc
