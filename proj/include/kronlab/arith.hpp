#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and rationals,
// plus parsing of exact rational inputs ("p/q" or decimal strings).

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kronlab/errors.hpp"

namespace kronlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt f{1};
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r{1};
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace detail

// Accepts "p/q", plain integers, and decimal strings ("0.4" reads as 4/10).
// Scientific notation and anything else is rejected.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto bad = [&] {
        throw contract_error("not a rational number: '" + std::string(text) + "'");
    };
    if (s.empty()) bad();

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) bad();
        BigInt q{std::string(den)};
        if (q == 0) throw contract_error("zero denominator in '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(num)}, q);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (!detail::all_digits(frac) || (!whole.empty() && !detail::all_digits(whole))) bad();
        std::string digits = std::string(whole) + std::string(frac);
        if (!detail::all_digits(digits)) bad();
        value = Rational(BigInt{digits}, int_pow(BigInt{10}, static_cast<unsigned>(frac.size())));
    } else {
        if (!detail::all_digits(s)) bad();
        value = Rational(BigInt{std::string(s)});
    }
    return negative ? -value : value;
}

inline std::string rational_to_text(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_weakly_decreasing(std::span<const Rational> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

inline Rational rational_sum(std::span<const Rational> v) {
    Rational s{0};
    for (const auto& x : v) s += x;
    return s;
}

// l1 distance; the shorter vector is padded with zeros.
inline Rational l1_distance(std::span<const Rational> a, std::span<const Rational> b) {
    Rational d{0};
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational ai = i < a.size() ? a[i] : Rational{0};
        Rational bi = i < b.size() ? b[i] : Rational{0};
        d += ai >= bi ? ai - bi : bi - ai;
    }
    return d;
}

}  // namespace kronlab
