#include "wzsum/modular.hpp"

namespace wzsum {

namespace {
constexpr long kMaxPrime = 1000000;
}

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0)
        return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

PrimePowerModulus::PrimePowerModulus(long p, unsigned e) : p_(p), e_(e) {
    if (p >= kMaxPrime)
        throw InvalidParameterError("PrimePowerModulus: prime " + std::to_string(p)
                                    + " exceeds the supported range (< 10^6)");
    if (!is_odd_prime(p))
        throw InvalidParameterError("PrimePowerModulus: " + std::to_string(p)
                                    + " is not an odd prime");
    if (e < 1)
        throw InvalidParameterError("PrimePowerModulus: exponent must be >= 1");
    modulus_ = pow(Integer(p), e);
}

Integer mod_reduce(const Rational& x, const PrimePowerModulus& m) {
    Integer den = x.denominator();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.modulus().get_mpz_t()) == 0)
        throw NonInvertibleDenominatorError("mod_reduce: denominator " + den.get_str()
                                            + " shares a factor with " + std::to_string(m.prime()));
    Integer out = (x.numerator() * inv) % m.modulus();
    if (out < 0)
        out += m.modulus();
    return out;
}

} // namespace wzsum
