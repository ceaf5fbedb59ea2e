#pragma once

#include "wzsum/rational.hpp"

namespace wzsum {

/// Deterministic primality check (trial division), limited to p < 10^6.
bool is_odd_prime(long p);

/// An odd prime power p^e used as a congruence modulus.
class PrimePowerModulus {
public:
    /// Requires p an odd prime below 10^6 and e >= 1; throws InvalidParameterError.
    PrimePowerModulus(long p, unsigned e);

    long prime() const { return p_; }
    unsigned exponent() const { return e_; }
    const Integer& modulus() const { return modulus_; }

private:
    long p_;
    unsigned e_;
    Integer modulus_;
};

/// Reduces a rational modulo p^e: numerator * denominator^{-1} in [0, p^e).
/// Throws NonInvertibleDenominatorError when gcd(denominator, p) > 1.
Integer mod_reduce(const Rational& x, const PrimePowerModulus& m);

} // namespace wzsum
