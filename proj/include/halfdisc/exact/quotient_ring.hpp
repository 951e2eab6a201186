#pragma once

#include <array>
#include <stdexcept>

#include "halfdisc/exact/poly.hpp"

namespace halfdisc {

/// Monic cubic modulus x^3 + a x^2 + b x + c.
template <class T>
struct CubicModulus {
    T a, b, c;

    static CubicModulus from_poly(const Poly<T>& m) {
        if (m.degree() != 3 || !m.is_monic())
            throw std::invalid_argument("quotient modulus must be a monic cubic");
        return {m.coeff(2), m.coeff(1), m.coeff(0)};
    }
    Poly<T> poly() const { return Poly<T>{c, b, a, T(1)}; }
    friend bool operator==(const CubicModulus&, const CubicModulus&) = default;
};

/// Element of T[x]/(m) for a monic cubic m, stored as its remainder r0 + r1 x + r2 x^2.
template <class T>
class QuotientElem {
public:
    QuotientElem(std::array<T, 3> rep, CubicModulus<T> m) : r_(std::move(rep)), m_(std::move(m)) {}

    static QuotientElem zero(const CubicModulus<T>& m) { return {{T(0), T(0), T(0)}, m}; }
    static QuotientElem one(const CubicModulus<T>& m) { return {{T(1), T(0), T(0)}, m}; }
    static QuotientElem from_poly(const Poly<T>& f, const CubicModulus<T>& m) {
        const Poly<T> r = f.rem_monic(m.poly());
        return {{r.coeff(0), r.coeff(1), r.coeff(2)}, m};
    }

    const std::array<T, 3>& rep() const { return r_; }
    const CubicModulus<T>& modulus() const { return m_; }
    Poly<T> poly() const { return Poly<T>{r_[0], r_[1], r_[2]}; }
    bool is_zero() const { return r_[0] == T(0) && r_[1] == T(0) && r_[2] == T(0); }

    QuotientElem& operator+=(const QuotientElem& o) {
        check(o);
        for (int i = 0; i < 3; ++i) r_[i] += o.r_[i];
        return *this;
    }
    QuotientElem& operator-=(const QuotientElem& o) {
        check(o);
        for (int i = 0; i < 3; ++i) r_[i] -= o.r_[i];
        return *this;
    }
    QuotientElem& operator*=(const T& s) {
        for (auto& v : r_) v *= s;
        return *this;
    }
    QuotientElem operator-() const { return {{-r_[0], -r_[1], -r_[2]}, m_}; }

    friend QuotientElem operator+(QuotientElem x, const QuotientElem& y) { return x += y; }
    friend QuotientElem operator-(QuotientElem x, const QuotientElem& y) { return x -= y; }
    friend QuotientElem operator*(QuotientElem x, const T& s) { return x *= s; }
    friend QuotientElem operator*(const T& s, QuotientElem x) { return x *= s; }

    friend QuotientElem operator*(const QuotientElem& x, const QuotientElem& y) {
        x.check(y);
        const auto& u = x.r_;
        const auto& v = y.r_;
        // Schoolbook product of degree <= 4, then fold x^4 and x^3 back.
        T p0 = u[0] * v[0];
        T p1 = u[0] * v[1] + u[1] * v[0];
        T p2 = u[0] * v[2] + u[1] * v[1] + u[2] * v[0];
        T p3 = u[1] * v[2] + u[2] * v[1];
        T p4 = u[2] * v[2];
        const auto& m = x.m_;
        // x^4 = -a x^3 - b x^2 - c x
        p3 -= m.a * p4;
        p2 -= m.b * p4;
        p1 -= m.c * p4;
        // x^3 = -a x^2 - b x - c
        p2 -= m.a * p3;
        p1 -= m.b * p3;
        p0 -= m.c * p3;
        return {{std::move(p0), std::move(p1), std::move(p2)}, m};
    }
    QuotientElem& operator*=(const QuotientElem& o) { return *this = *this * o; }

    friend bool operator==(const QuotientElem& x, const QuotientElem& y) { return x.m_ == y.m_ && x.r_ == y.r_; }

    /// Exact division of every coefficient by s.
    QuotientElem exact_div(const T& s) const {
        const Poly<T> q = poly().exact_div(s);
        return {{q.coeff(0), q.coeff(1), q.coeff(2)}, m_};
    }

    /// Norm from T[x]/(m) down to T: determinant of multiplication-by-self,
    /// equal to prod over roots alpha of m of rep(alpha).
    T norm() const {
        const QuotientElem xe{{T(0), T(1), T(0)}, m_};
        const QuotientElem c1 = *this * xe;
        const QuotientElem c2 = c1 * xe;
        const auto& a = r_;
        const auto& b = c1.r_;
        const auto& c = c2.r_;
        // Columns are the images of 1, x, x^2.
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
               c[0] * (a[1] * b[2] - a[2] * b[1]);
    }

private:
    void check(const QuotientElem& o) const {
        if (!(m_ == o.m_)) throw std::invalid_argument("quotient ring modulus mismatch");
    }

    std::array<T, 3> r_;
    CubicModulus<T> m_;
};

} // namespace halfdisc
