#pragma once

#include "wzsum/rational.hpp"

namespace wzsum {

/// Rising factorial (a)_m for any integer m:
///   (a)_0 = 1, (a)_m = a(a+1)...(a+m-1) for m > 0,
///   (a)_{-n} = 1/((a-n)_n) for n > 0.
/// Throws PoleError when m < 0 and a factor (a-j), 1 <= j <= -m, vanishes.
Rational rising_factorial(const Rational& a, long m);

/// 1/(a)_m. Total for m < 0, where it equals (a+m)_{-m}; in particular
/// inv_rising_factorial(1, m) == 0 for every m < 0.
/// Throws DivisionByZeroError when m >= 0 and (a)_m == 0.
Rational inv_rising_factorial(const Rational& a, long m);

/// Central binomial coefficient C(2n, n), exact.
Integer central_binomial(unsigned long n);

} // namespace wzsum
