#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cfheight {

// All arithmetic in this library is exact. Int never overflows and Rat is
// always kept in lowest terms with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

inline Int pow10(std::size_t e) {
    Int r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 10;
    return r;
}

// Fibonacci numbers under the convention F(1) = 1, F(2) = 2.
inline Int fibonacci(std::size_t k) {
    if (k == 0) throw std::out_of_range("fibonacci: index starts at 1");
    Int a = 1, b = 2;
    if (k == 1) return a;
    for (std::size_t i = 2; i < k; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return b;
}

// x^{-1} mod m via the extended Euclidean algorithm; result lies in [1, m-1].
inline Int mod_inverse(const Int& x, const Int& m) {
    if (m < 2) throw std::domain_error("mod_inverse: modulus must be at least 2");
    Int old_r = x % m, r = m;
    if (old_r < 0) old_r += m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::domain_error("mod_inverse: argument is not invertible (gcd(x, m) = " +
                                old_r.str() + ")");
    if (old_s < 0) old_s += m;
    return old_s;
}

namespace detail {

inline std::size_t decimal_digits(const Int& v) { return v.str().size(); }

// floor(log10(num/den)) for positive num/den.
inline long floor_log10(const Int& num, const Int& den) {
    long e = static_cast<long>(decimal_digits(num)) - static_cast<long>(decimal_digits(den));
    // 10^e <= num/den  <=>  num * 10^{max(0,-e)} >= den * 10^{max(0,e)}
    auto at_least = [&](long ee) {
        Int lhs = num, rhs = den;
        if (ee >= 0)
            rhs *= pow10(static_cast<std::size_t>(ee));
        else
            lhs *= pow10(static_cast<std::size_t>(-ee));
        return lhs >= rhs;
    };
    return at_least(e) ? e : e - 1;
}

}  // namespace detail

// Fixed-point decimal rendering of a nonnegative rational with exactly
// `significant` significant digits, ties rounded half to even. Never goes
// through floating point, so the output is identical on every platform.
inline std::string to_decimal_string(const Rat& value, int significant = 12) {
    if (significant < 1) throw std::invalid_argument("to_decimal_string: need at least 1 digit");
    if (value < 0) throw std::invalid_argument("to_decimal_string: negative value");
    if (value == 0) return "0";

    const Int num = numerator(value);
    const Int den = denominator(value);
    long e = detail::floor_log10(num, den);
    long scale = significant - 1 - e;

    Int n = num, d = den;
    if (scale >= 0)
        n *= pow10(static_cast<std::size_t>(scale));
    else
        d *= pow10(static_cast<std::size_t>(-scale));
    Int digits = n / d;
    Int rem = n % d;
    Int twice = rem * 2;
    if (twice > d || (twice == d && digits % 2 != 0)) ++digits;
    if (digits == pow10(static_cast<std::size_t>(significant))) {
        digits = pow10(static_cast<std::size_t>(significant - 1));
        ++e;
    }

    std::string ds = digits.str();
    if (e >= 0) {
        std::size_t ip = static_cast<std::size_t>(e) + 1;
        if (ip >= ds.size()) return ds + std::string(ip - ds.size(), '0');
        return ds.substr(0, ip) + "." + ds.substr(ip);
    }
    return "0." + std::string(static_cast<std::size_t>(-e) - 1, '0') + ds;
}

// Accepts "p/q", a decimal like "0.02", or a plain integer.
inline Rat parse_rational(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    std::string s(text);
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw bad();
            return Rat(num, den);
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
            if (fp.find_first_not_of("0123456789") != std::string::npos) throw bad();
            bool neg = !ip.empty() && ip[0] == '-';
            Int whole = ip.empty() || ip == "-" ? Int(0) : Int(ip);
            Rat frac(Int(fp.empty() ? "0" : fp), pow10(fp.size()));
            return neg ? Rat(whole) - frac : Rat(whole) + frac;
        }
        return Rat(Int(s));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

}  // namespace cfheight
