#pragma once

// Certified rational brackets for e^x. The truncated Taylor sum is an exact
// rational lower bound for x ≥ 0; the tail after N terms is majorized by the
// geometric series term_N · r/(1-r) with r = x/(N+1) once N+1 > x, which gives
// the upper bound. Comparisons against transcendental bound expressions are
// decided by refining the bracket, never by trusting floating point.

#include <utility>

#include "kronlab/arith.hpp"
#include "kronlab/errors.hpp"

namespace kronlab {

struct RationalInterval {
    Rational lo;
    Rational hi;
};

// lo ≤ e^x ≤ hi with hi - lo ≤ lo · 10^-digits; requires x ≥ 0.
inline RationalInterval exp_interval(const Rational& x, unsigned digits) {
    if (x < 0) throw contract_error("exp_interval: negative argument");
    const Rational target = Rational(BigInt{1}, int_pow(BigInt{10}, digits));
    Rational term{1};
    Rational sum{1};
    unsigned n = 0;
    while (true) {
        ++n;
        term *= x / n;
        sum += term;
        if (Rational{n + 1} <= x) continue;  // tail bound needs its ratio < 1
        const Rational ratio = x / (n + 1);
        const Rational tail = term * ratio / (1 - ratio);
        if (tail <= sum * target) return {sum, sum + tail};
    }
}

// Decides a < b·e^x exactly (a, b > 0 rational, x ≥ 0), refining as needed.
inline bool less_than_scaled_exp(const Rational& a, const Rational& b, const Rational& x) {
    for (unsigned digits = 20;; digits *= 2) {
        const RationalInterval e = exp_interval(x, digits);
        if (a < b * e.lo) return true;
        if (a >= b * e.hi) return false;
        if (digits > 100000)
            throw std::logic_error("less_than_scaled_exp: comparison failed to resolve");
    }
}

}  // namespace kronlab
