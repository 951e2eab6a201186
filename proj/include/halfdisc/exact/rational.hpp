#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "halfdisc/exact/integer.hpp"

namespace halfdisc {

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(integer_from_string(s));
        return Rational(integer_from_string(s.substr(0, slash)), integer_from_string(s.substr(slash + 1)));
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(10); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

/// v_p(q) for nonzero q: exponent of p in numerator minus that in denominator.
inline long valuation(const Rational& q, const Integer& p) {
    if (q.is_zero()) throw DomainError("valuation of zero undefined");
    require_prime(p);
    Integer rest;
    const Integer n = q.num();
    const Integer d = q.den();
    const auto vn = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    const auto vd = mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    return static_cast<long>(vn) - static_cast<long>(vd);
}

inline Rational pow(const Rational& base, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.raw().get_num_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.raw().get_den_mpz_t(), e);
    return Rational(r);
}

} // namespace halfdisc
