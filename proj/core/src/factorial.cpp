#include "wzsum/factorial.hpp"

namespace wzsum {

Rational rising_factorial(const Rational& a, long m) {
    if (m >= 0) {
        Rational out(1);
        for (long i = 0; i < m; ++i)
            out *= a + Rational(i);
        return out;
    }
    // (a)_{-n} = 1/((a-1)(a-2)...(a-n))
    Rational prod(1);
    for (long j = 1; j <= -m; ++j) {
        Rational factor = a - Rational(j);
        if (factor.is_zero())
            throw PoleError("rising_factorial: (" + a.to_string() + ")_" + std::to_string(m)
                            + " is infinite, factor a-" + std::to_string(j) + " vanishes");
        prod *= factor;
    }
    return prod.inverse();
}

Rational inv_rising_factorial(const Rational& a, long m) {
    if (m >= 0) {
        Rational value = rising_factorial(a, m);
        if (value.is_zero())
            throw DivisionByZeroError("inv_rising_factorial: (" + a.to_string() + ")_"
                                      + std::to_string(m) + " is zero");
        return value.inverse();
    }
    // 1/(a)_m = (a+m)_{-m}: a finite product, zero exactly when a factor vanishes.
    Rational out(1);
    for (long i = 0; i < -m; ++i)
        out *= a + Rational(m + i);
    return out;
}

Integer central_binomial(unsigned long n) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), 2 * n, n);
    return out;
}

} // namespace wzsum
