#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "arrival/error.hpp"

namespace arrival {

// All exact arithmetic runs on arbitrary-precision rationals kept in lowest
// terms; float64 is the alternative scalar for the same templated code paths.
// Expression templates are off so every operation yields a concrete value
// and generic code deduces the number type, never an expression node.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static const char* mode_name() { return "rational"; }
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static const char* mode_name() { return "float"; }
    static double from_rational(const Rational& r) { return r.convert_to<double>(); }
};

template <class S>
S scalar_from_rational(const Rational& r) {
    return scalar_traits<S>::from_rational(r);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

template <class S>
S abs_scalar(const S& x) {
    return x < S(0) ? S(-x) : x;
}

// x^n for nonnegative integer n, by repeated squaring.
template <class S>
S pow_scalar(S x, unsigned long n) {
    S result(1);
    while (n > 0) {
        if (n & 1) result *= x;
        x *= x;
        n >>= 1;
    }
    return result;
}

// Accepts "3/4", "0.25", ".5", "2", with optional leading sign. Plain
// decimals convert exactly (digits over a power of ten); exponents are
// rejected so no input silently rounds.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw ParseError("invalid number '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    std::string_view s = text;
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail();

    auto all_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        const std::string num_str(num), den_str(den);
        BigInt n(num_str), d(den_str);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(n, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (!whole.empty() && !all_digits(whole)) fail();
        if (!all_digits(frac)) fail();
        const std::string whole_str(whole), frac_str(frac);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt n = whole_str.empty() ? BigInt(0) : BigInt(whole_str);
        BigInt f(frac_str);
        value = Rational(n * scale + f, scale);
    } else {
        const std::string digits(s);
        if (!all_digits(s)) fail();
        value = Rational(BigInt(digits));
    }
    return negative ? Rational(-value) : value;
}

// Canonical "num/den" form; lowest terms, denominator always printed.
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result(1);
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact at every step
    }
    return result;
}

inline BigInt factorial(long n) {
    BigInt result(1);
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace arrival
