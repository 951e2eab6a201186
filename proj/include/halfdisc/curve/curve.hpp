#pragma once

#include <string>

#include "halfdisc/exact/poly.hpp"
#include "halfdisc/exact/resultant.hpp"

namespace halfdisc {

/// Elliptic curve y^2 = P(x) = x^3 + a x^2 + b x + c over Q with integral coefficients.
class Curve {
public:
    static Curve from_cubic(const Integer& a, const Integer& b, const Integer& c) { return Curve(a, b, c); }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    /// Discriminant of the cubic P.
    const Integer& disc_p() const { return disc_p_; }
    const Integer& c4() const { return c4_; }
    /// Discriminant of the elliptic curve, 16 disc(P).
    const Integer& disc_e() const { return disc_e_; }

    ZPoly poly() const { return ZPoly{c_, b_, a_, Integer(1)}; }

    // Weierstrass b-invariants with a1 = a3 = 0.
    Integer b2() const { return 4 * a_; }
    Integer b4() const { return 2 * b_; }
    Integer b6() const { return 4 * c_; }
    Integer b8() const { return Integer(4 * a_ * c_ - b_ * b_); }

    /// The curve y^2 = P(x + t).
    Curve translated(const Integer& t) const {
        const ZPoly q = poly().shift(t);
        return Curve(q.coeff(2), q.coeff(1), q.coeff(0));
    }

    std::string str() const {
        return "y^2 = x^3 + (" + to_string(a_) + ")x^2 + (" + to_string(b_) + ")x + (" + to_string(c_) + ")";
    }

    friend bool operator==(const Curve& x, const Curve& y) { return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_; }

private:
    Curve(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        disc_p_ = a_ * a_ * b_ * b_ - 4 * b_ * b_ * b_ - 4 * a_ * a_ * a_ * c_ - 27 * c_ * c_ + 18 * a_ * b_ * c_;
        if (disc_p_ == 0) throw DomainError("singular cubic: discriminant of P is zero");
        c4_ = 16 * a_ * a_ - 48 * b_;
        disc_e_ = 16 * disc_p_;
    }

    Integer a_, b_, c_;
    Integer disc_p_, c4_, disc_e_;
};

} // namespace halfdisc
