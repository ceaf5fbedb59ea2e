#pragma once

// Brute-force reference evaluators for the test suites, written directly
// from the defining formulas on raw mpq_class. They share no code with the
// library: factorials are literal products, binomials come from the
// multiplicative definition, and sums are accumulated term by term with no
// incremental ratio updates.

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>

namespace oracle {

inline mpq_class rf(const mpq_class& a, long m) {
    if (m >= 0) {
        mpq_class out = 1;
        for (long i = 0; i < m; ++i)
            out *= a + i;
        return out;
    }
    mpq_class prod = 1;
    for (long j = 1; j <= -m; ++j)
        prod *= a - j;
    if (prod == 0)
        throw std::domain_error("oracle::rf: pole");
    return mpq_class(1) / prod;
}

inline mpq_class inv_rf(const mpq_class& a, long m) {
    if (m >= 0) {
        mpq_class v = rf(a, m);
        if (v == 0)
            throw std::domain_error("oracle::inv_rf: division by zero");
        return mpq_class(1) / v;
    }
    mpq_class out = 1;
    for (long i = 0; i < -m; ++i)
        out *= a + m + i;
    return out;
}

inline mpz_class binom(long n, long k) {
    mpq_class out = 1;
    for (long i = 1; i <= k; ++i) {
        mpq_class f(n - k + i, i);
        f.canonicalize();
        out *= f;
    }
    assert(out.get_den() == 1);
    return out.get_num();
}

inline int sign_pow(long e) {
    return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
}

// Certificate terms, straight from their closed forms.

inline mpq_class F_wz(long l, long s, long n, long k) {
    mpq_class il(1, l);
    mpq_class out = sign_pow(n + k);
    out *= 2 * l * n + 1;
    out *= rf(il, n + s) * rf(il, n - s) * rf(il, n + k);
    out *= inv_rf(1, n + s) * inv_rf(1, n - s) * inv_rf(1, n - k);
    out *= inv_rf(il, k + s) * inv_rf(il, k - s);
    return out;
}

inline mpq_class G_wz(long l, long s, long n, long k) {
    mpq_class il(1, l);
    mpq_class out = sign_pow(n + k);
    out *= l;
    out *= rf(il, n + s) * rf(il, n - s) * rf(il, n + k - 1);
    out *= inv_rf(1, n + s - 1) * inv_rf(1, n - s - 1) * inv_rf(1, n - k);
    out *= inv_rf(il, k + s) * inv_rf(il, k - s);
    return out;
}

inline mpq_class F_zb(long l, long s, long n, long k) {
    mpq_class il(1, l);
    mpq_class out = sign_pow(k);
    out *= 2 * l * n + 1;
    out *= rf(il, n + s) * rf(il, n - s) * rf(il, n) * rf(il, n + k);
    out *= inv_rf(1, n + s) * inv_rf(1, n - s) * inv_rf(1, n) * inv_rf(1, n - k);
    out *= inv_rf(il, k + s) * inv_rf(il, k - s);
    return out;
}

inline mpq_class G_zb(long l, long s, long n, long k) {
    mpq_class il(1, l);
    mpq_class out = sign_pow(k - 1);
    out *= l * l;
    out *= rf(il, n + s) * rf(il, n - s) * rf(il, n) * rf(il, n + k - 1);
    out *= inv_rf(1, n + s - 1) * inv_rf(1, n - s - 1) * inv_rf(1, n - 1) * inv_rf(1, n - k);
    out *= inv_rf(il, k + s) * inv_rf(il, k - s);
    return out;
}

// Identity sides. theorem = 1 or 2.

inline mpq_class theorem_sum(int theorem, long l, long s, long M) {
    mpq_class il(1, l);
    mpq_class total = 0;
    for (long n = s; n <= M; ++n) {
        mpq_class w = theorem == 1
            ? mpq_class(2 * l * n + 1) * (l * l * n * n + l * n + 1 - l * l * s * s)
            : mpq_class(2 * l * n + 1) * (2 * l * l * n * n + 2 * l * n + 1 - l * l * s * s);
        mpq_class t = rf(il, n + s) * rf(il, n - s) / (rf(1, n + s) * rf(1, n - s));
        mpq_class core = rf(il, n) / rf(1, n);
        t *= theorem == 1 ? core : core * core;
        if (theorem == 1 && n % 2 != 0)
            w = -w;
        total += w * t;
    }
    return total;
}

inline mpq_class theorem_closed(int theorem, long l, long s, long M) {
    mpq_class b(l + 1, l);
    mpq_class out = rf(b, M + s) * rf(b, M - s) / (rf(1, M + s) * rf(1, M - s));
    mpq_class core = rf(b, M) / rf(1, M);
    out *= theorem == 1 ? core : core * core;
    if (theorem == 1 && M % 2 != 0)
        out = -out;
    return out;
}

// Binomial sums. family: 'B' or 'C'; weight: 0 linear, 1 cube, 2 guo-b, 3 guo-c.

inline mpz_class weight_of(int weight, long n) {
    mpz_class lin = 4 * n + 1;
    switch (weight) {
    case 0: return lin;
    case 1: return lin * lin * lin;
    case 2: return lin * mpz_class(4 * n * n + 2 * n + 1);
    default: return lin * mpz_class(8 * n * n + 4 * n + 1);
    }
}

inline mpq_class family_sum(char family, int weight, long n_max) {
    mpq_class total = 0;
    for (long n = 0; n <= n_max; ++n) {
        mpz_class c = binom(2 * n, n);
        mpq_class term;
        if (family == 'B') {
            mpz_class base;
            mpz_pow_ui(base.get_mpz_t(), mpz_class(-64).get_mpz_t(), static_cast<unsigned long>(n));
            term = mpq_class(weight_of(weight, n) * c * c * c, base);
        } else {
            mpz_class base;
            mpz_pow_ui(base.get_mpz_t(), mpz_class(256).get_mpz_t(), static_cast<unsigned long>(n));
            term = mpq_class(weight_of(weight, n) * c * c * c * c, base);
        }
        term.canonicalize();
        total += term;
    }
    return total;
}

inline mpz_class mod_of(const mpq_class& x, const mpz_class& m) {
    mpz_class inv;
    int ok = mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t());
    assert(ok != 0);
    (void)ok;
    mpz_class out = (x.get_num() * inv) % m;
    if (out < 0)
        out += m;
    return out;
}

} // namespace oracle
