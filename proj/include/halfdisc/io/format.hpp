#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "halfdisc/exact/rational.hpp"

namespace halfdisc {

namespace detail {

// Lays out the digit string d (no leading zeros) times 10^(exp10 - len + 1) in %g style.
inline std::string g_layout(bool negative, std::string digits, long exp10, int precision) {
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out = negative ? "-" : "";
    if (exp10 < -4 || exp10 >= precision) {
        out += digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        char buf[32];
        std::snprintf(buf, sizeof buf, "e%c%02ld", exp10 < 0 ? '-' : '+', exp10 < 0 ? -exp10 : exp10);
        return out + buf;
    }
    if (exp10 < 0) return out + "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + digits;
    const auto int_len = static_cast<std::size_t>(exp10 + 1);
    if (digits.size() <= int_len) return out + digits + std::string(int_len - digits.size(), '0');
    return out + digits.substr(0, int_len) + "." + digits.substr(int_len);
}

} // namespace detail

/// q to `precision` significant digits, round-half-even on the exact value, %g layout.
inline std::string format_decimal(const Rational& q, int precision = 12) {
    if (q.is_zero()) return "0";
    const bool negative = q.sign() < 0;
    const Integer num = abs(q.num());
    const Integer den = q.den();
    // exponent estimate, corrected below
    long e = static_cast<long>(decimal_digits(num)) - static_cast<long>(decimal_digits(den));
    auto scaled_floor = [&](long exp10, Integer& rem, Integer& divisor) {
        // floor(|q| * 10^(precision - 1 - exp10)) and the remainder over divisor
        const long shift = precision - 1 - exp10;
        Integer n = num, d = den;
        if (shift >= 0)
            n *= ipow(Integer(10), static_cast<unsigned long>(shift));
        else
            d *= ipow(Integer(10), static_cast<unsigned long>(-shift));
        Integer qv;
        mpz_fdiv_qr(qv.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        divisor = d;
        return qv;
    };
    const Integer lo = ipow(Integer(10), static_cast<unsigned long>(precision - 1));
    const Integer hi = lo * 10;
    Integer rem, divisor, m;
    for (int guard = 0; guard < 4; ++guard) {
        m = scaled_floor(e, rem, divisor);
        if (m < lo)
            --e;
        else if (m >= hi)
            ++e;
        else
            break;
    }
    const int c = cmp(Integer(2 * rem), divisor);
    if (c > 0 || (c == 0 && mpz_odd_p(m.get_mpz_t()))) m += 1;
    if (m == hi) {
        m = lo;
        ++e;
    }
    return detail::g_layout(negative, to_string(m), e, precision);
}

/// Binary double to `precision` significant digits (the double's exact value, half-even).
inline std::string format_decimal(double v, int precision = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

inline std::string format_decimal(long double v, int precision = 12) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.*Lg", precision, v);
    return buf;
}

/// Minimal CSV row builder; fields are numeric or identifier-like, so no quoting is needed
/// except for embedded commas or quotes.
inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") != std::string::npos) {
            out += '"';
            for (char ch : f) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
        } else {
            out += f;
        }
    }
    return out + "\n";
}

} // namespace halfdisc
