#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "halfdisc/exact/poly.hpp"

namespace halfdisc {

/// Dense polynomial over Z/mZ for a modulus m < 2^32.
class ModPoly {
public:
    ModPoly(std::uint64_t modulus) : m_(modulus) {  // NOLINT(google-explicit-constructor)
        if (modulus < 2 || modulus >= (std::uint64_t{1} << 32))
            throw std::invalid_argument("ModPoly modulus must lie in [2, 2^32)");
    }
    ModPoly(std::vector<std::uint64_t> c, std::uint64_t modulus) : ModPoly(modulus) {
        c_ = std::move(c);
        for (auto& v : c_) v %= m_;
        trim();
    }
    static ModPoly from_integer_poly(const ZPoly& f, std::uint64_t modulus) {
        ModPoly r(modulus);
        r.c_.resize(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) r.c_[i] = reduce(f.coeffs()[i], modulus);
        r.trim();
        return r;
    }
    static std::uint64_t reduce(const Integer& v, std::uint64_t modulus) {
        return mpz_fdiv_ui(v.get_mpz_t(), modulus);
    }

    std::uint64_t modulus() const { return m_; }
    bool is_zero() const { return c_.empty(); }
    Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        ModPoly r(a.m_);
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            const std::uint64_t x = a.coeff(i), y = b.coeff(i);
            r.c_[i] = x >= y ? x - y : x + a.m_ - y;
        }
        r.trim();
        return r;
    }

    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        ModPoly r(a.m_);
        if (a.is_zero() || b.is_zero()) return r;
        const std::size_t n = a.c_.size() + b.c_.size() - 1;
        std::vector<unsigned __int128> acc(n, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const std::uint64_t x = a.c_[i];
            if (x == 0) continue;
            unsigned __int128* row = acc.data() + i;
            for (std::size_t j = 0; j < b.c_.size(); ++j) row[j] += static_cast<unsigned __int128>(x * b.c_[j]);
        }
        r.c_.resize(n);
        for (std::size_t k = 0; k < n; ++k) r.c_[k] = static_cast<std::uint64_t>(acc[k] % a.m_);
        r.trim();
        return r;
    }

    ModPoly scaled(std::uint64_t s) const {
        ModPoly r(m_);
        r.c_ = c_;
        s %= m_;
        for (auto& v : r.c_) v = (v * s) % m_;
        r.trim();
        return r;
    }

    std::uint64_t operator()(std::uint64_t x) const {
        unsigned __int128 acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % m_;
        return static_cast<std::uint64_t>(acc);
    }

    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

private:
    void check(const ModPoly& o) const {
        if (o.m_ != m_) throw std::invalid_argument("ModPoly modulus mismatch");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t m_;
    std::vector<std::uint64_t> c_;
};

/// Inverse of u modulo m (gcd(u, m) = 1).
inline std::uint64_t mod_inverse(std::uint64_t u, std::uint64_t m) {
    Integer r;
    const Integer uu(static_cast<unsigned long>(u)), mm(static_cast<unsigned long>(m));
    if (mpz_invert(r.get_mpz_t(), uu.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw DomainError("no modular inverse");
    return mpz_get_ui(r.get_mpz_t());
}

} // namespace halfdisc
