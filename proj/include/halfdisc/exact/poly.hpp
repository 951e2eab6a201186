#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "halfdisc/exact/integer.hpp"
#include "halfdisc/exact/rational.hpp"

namespace halfdisc {

/// Polynomial degree with a distinct -infinity for the zero polynomial.
/// Asking a -infinity degree for its value throws.
class Degree {
public:
    static constexpr Degree neg_inf() { return Degree(); }
    constexpr explicit Degree(long d) : value_(d), finite_(true) {}

    constexpr bool is_neg_inf() const { return !finite_; }
    long value() const {
        if (!finite_) throw DomainError("degree of the zero polynomial is -infinity");
        return value_;
    }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return Degree();
        return Degree(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(Degree a, long b) { return a.finite_ && a.value_ == b; }
    friend constexpr std::strong_ordering operator<=>(Degree a, long b) {
        if (!a.finite_) return std::strong_ordering::less;
        return a.value_ <=> b;
    }

    friend std::ostream& operator<<(std::ostream& os, Degree d) {
        if (d.is_neg_inf()) return os << "-inf";
        return os << d.value_;
    }

private:
    constexpr Degree() = default;
    long value_ = 0;
    bool finite_ = false;
};

/// Dense univariate polynomial, coefficients in ascending degree, always trimmed.
/// T is Integer or Rational (anything with a ring structure and T(long)).
template <class T>
class Poly {
public:
    using coeff_type = T;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
    static Poly monomial(const T& v, std::size_t e) {
        std::vector<T> c(e + 1, T(0));
        c[e] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1); }
    /// Coefficient of x^i, zero beyond the degree.
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    const T& lc() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const T& s) {
        if (s == T(0)) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) detail_addmul(r[i + j], a.c_[i], b.c_[j]);
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Horner evaluation at any type U that T converts into.
    template <class U>
    U operator()(const U& x) const {
        U acc = U(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(r));
    }

    /// p(x + t).
    Poly shift(const T& t) const {
        Poly r;
        const Poly lin{t, T(1)};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly::constant(*it);
        return r;
    }

    /// Remainder modulo a monic divisor; valid over any ring.
    Poly rem_monic(const Poly& m) const {
        if (!m.is_monic()) throw std::invalid_argument("rem_monic: divisor must be monic");
        const std::size_t dm = m.c_.size() - 1;
        if (c_.size() <= dm) return *this;
        std::vector<T> r = c_;
        for (std::size_t d = r.size() - 1; d >= dm; --d) {
            const T t = r[d];
            if (t != T(0)) {
                for (std::size_t k = 0; k < dm; ++k) detail_submul(r[d - dm + k], t, m.c_[k]);
            }
            r[d] = T(0);
            if (d == dm) break;
        }
        r.resize(dm);
        return Poly(std::move(r));
    }

    /// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
    Poly prem(const Poly& b) const {
        if (b.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
        if (c_.size() < b.c_.size()) return *this;
        const std::size_t db = b.c_.size() - 1;
        std::vector<T> r = c_;
        const T& l = b.c_.back();
        std::size_t steps = r.size() - db;
        for (std::size_t d = r.size() - 1; steps > 0; --d, --steps) {
            const T t = r[d];
            for (std::size_t k = 0; k < d; ++k) r[k] *= l;
            for (std::size_t k = 0; k < db; ++k) detail_submul(r[d - db + k], t, b.c_[k]);
            r[d] = T(0);
        }
        r.resize(db);
        return Poly(std::move(r));
    }

    /// Quotient and remainder over a field.
    std::pair<Poly, Poly> divmod(const Poly& b) const
        requires std::is_same_v<T, Rational>
    {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        if (c_.size() < b.c_.size()) return {Poly(), *this};
        const std::size_t db = b.c_.size() - 1;
        std::vector<T> r = c_;
        std::vector<T> q(r.size() - db, T(0));
        const T inv = T(1) / b.c_.back();
        for (std::size_t d = r.size() - 1;; --d) {
            const T t = r[d] * inv;
            q[d - db] = t;
            for (std::size_t k = 0; k <= db; ++k) r[d - db + k] -= t * b.c_[k];
            if (d == db) break;
        }
        r.resize(db);
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    /// Every coefficient divided exactly by s (throws if inexact over Integer).
    Poly exact_div(const T& s) const {
        if (s == T(0)) throw DomainError("division by zero");
        Poly r = *this;
        for (auto& v : r.c_) {
            if constexpr (std::is_same_v<T, Integer>) {
                if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t()))
                    throw DomainError("inexact coefficient division");
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
            } else {
                v /= s;
            }
        }
        return r;
    }

    std::string str(const char* var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == T(0)) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[i] << ")";
            if (i > 0) os << "*" << var << "^" << i;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    static void detail_addmul(T& acc, const T& a, const T& b) {
        if constexpr (std::is_same_v<T, Integer>)
            mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        else
            acc += a * b;
    }
    static void detail_submul(T& acc, const T& a, const T& b) {
        if constexpr (std::is_same_v<T, Integer>)
            mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        else
            acc -= a * b;
    }

    std::vector<T> c_;
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

inline QPoly to_rational(const ZPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.size());
    for (const auto& v : f.coeffs()) c.emplace_back(v);
    return QPoly(std::move(c));
}

/// Integer polynomial d*f together with the positive common denominator d.
inline std::pair<ZPoly, Integer> clear_denominators(const QPoly& f) {
    Integer d = 1;
    for (const auto& v : f.coeffs()) d = ilcm(d, v.den());
    std::vector<Integer> c;
    c.reserve(f.size());
    for (const auto& v : f.coeffs()) c.push_back(v.num() * (d / v.den()));
    return {ZPoly(std::move(c)), d};
}

/// f = sign * content * primitive with content > 0 and lc(primitive) > 0.
template <class T>
struct ContentSplit {
    T content;
    int sign = 1;
    Poly<T> primitive;
};

inline ContentSplit<Integer> content_primitive(const ZPoly& f) {
    if (f.is_zero()) throw DomainError("content of the zero polynomial");
    Integer g = 0;
    for (const auto& v : f.coeffs()) g = igcd(g, v);
    const int s = f.lc() < 0 ? -1 : 1;
    ZPoly prim = f.exact_div(s < 0 ? Integer(-g) : g);
    return {g, s, std::move(prim)};
}

/// Rational content: gcd of numerators over lcm of denominators.
inline ContentSplit<Rational> content_primitive(const QPoly& f) {
    if (f.is_zero()) throw DomainError("content of the zero polynomial");
    auto [zf, d] = clear_denominators(f);
    auto split = content_primitive(zf);
    return {Rational(split.content, d), split.sign, to_rational(split.primitive)};
}

inline ZPoly primitive_part(const ZPoly& f) {
    if (f.is_zero()) return f;
    return content_primitive(f).primitive;
}

/// gcd over Q, returned as a primitive integer polynomial with positive leading coefficient.
inline ZPoly gcd_primitive(ZPoly a, ZPoly b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = a.prem(b);
        a = std::move(b);
        b = r.is_zero() ? r : primitive_part(r);
    }
    return primitive_part(a);
}

/// Whether b divides a over Q.
inline bool divides_over_q(const ZPoly& b, const ZPoly& a) {
    if (b.is_zero()) throw DomainError("divisibility by zero polynomial");
    return a.prem(b).is_zero();
}

} // namespace halfdisc
