#include "wzsum/identity.hpp"

#include "wzsum/certificate.hpp"
#include "wzsum/factorial.hpp"

namespace wzsum {

void IdentityParams::validate() const {
    if (ell < 1)
        throw InvalidParameterError("IdentityParams: ell must be >= 1");
    if (s < 0)
        throw InvalidParameterError("IdentityParams: s must be >= 0");
    if (M < s)
        throw InvalidParameterError("IdentityParams: M must be >= s");
}

namespace {

Rational weight(Theorem t, long ell, long s, long n) {
    long l2 = ell * ell;
    if (t == Theorem::One)
        return Rational(2 * ell * n + 1) * Rational(l2 * n * n + ell * n + 1 - l2 * s * s);
    return Rational(2 * ell * n + 1) * Rational(2 * l2 * n * n + 2 * ell * n + 1 - l2 * s * s);
}

} // namespace

Rational theorem_summand(Theorem t, const IdentityParams& p, long n) {
    Rational inv_ell(1, p.ell);
    Rational out = weight(t, p.ell, p.s, n);
    if (t == Theorem::One && n % 2 != 0)
        out = -out;
    out *= rising_factorial(inv_ell, n + p.s) * inv_rising_factorial(Rational(1), n + p.s);
    out *= rising_factorial(inv_ell, n - p.s) * inv_rising_factorial(Rational(1), n - p.s);
    Rational core = rising_factorial(inv_ell, n) * inv_rising_factorial(Rational(1), n);
    out *= (t == Theorem::One) ? core : core * core;
    return out;
}

Rational theorem_lhs(Theorem t, const IdentityParams& p) {
    p.validate();
    Rational total(0);
    for (long n = p.s; n <= p.M; ++n)
        total += theorem_summand(t, p, n);
    return total;
}

Rational theorem_rhs(Theorem t, const IdentityParams& p) {
    p.validate();
    Rational base(p.ell + 1, p.ell); // 1 + 1/ell
    Rational out = rising_factorial(base, p.M + p.s) / rising_factorial(Rational(1), p.M + p.s);
    out *= rising_factorial(base, p.M - p.s) / rising_factorial(Rational(1), p.M - p.s);
    Rational core = rising_factorial(base, p.M) / rising_factorial(Rational(1), p.M);
    out *= (t == Theorem::One) ? core : core * core;
    if (t == Theorem::One && p.M % 2 != 0)
        out = -out;
    return out;
}

IdentityReport verify_identity(Theorem t, const IdentityParams& p, bool with_trace) {
    IdentityReport report{t, p, theorem_lhs(t, p), theorem_rhs(t, p), false, {}};
    report.equal = (report.lhs == report.rhs);
    if (with_trace) {
        report.trace.reserve(p.M - p.s + 1);
        for (long n = p.s; n <= p.M; ++n)
            report.trace.push_back(theorem_summand(t, p, n));
    }
    return report;
}

ReplayReport replay_telescoping_proof(Theorem t, const IdentityParams& p) {
    p.validate();
    ReplayReport report;
    report.theorem = t;
    report.params = p;

    Rational inv_ell(1, p.ell);
    Rational c;
    try {
        c = Rational(p.ell * p.ell) * rising_factorial(inv_ell, 1 + p.s)
          * rising_factorial(inv_ell, 1 - p.s);
    } catch (const PoleError&) {
        // (1)_{1-s} is infinite for ell = 1, s >= 2; the proof's multiplier
        // does not exist there.
        report.applicable = false;
        return report;
    }
    report.applicable = true;
    report.multiplier = c;

    CertificateId cid = (t == Theorem::One) ? CertificateId::WzPair
                                            : CertificateId::ZeilbergerPair;
    Rational q(t == Theorem::One ? 1 : 2); // q(1) of the certificate's recurrence
    const CertificatePair& pair = certificate(cid);

    Rational g_lower = pair.G.eval(p.ell, p.s, p.s, 1); // G(s,1), zero by convention
    report.termwise_equal = true;
    report.partial_sums_equal = true;

    Rational acc(0);
    Rational bound(0);
    for (long n = p.s; n <= p.M; ++n) {
        Rational step = c * (pair.F.eval(p.ell, p.s, n, 0) - q * pair.F.eval(p.ell, p.s, n, 1));
        if (step != theorem_summand(t, p, n))
            report.termwise_equal = false;
        acc += step;
        bound = c * (pair.G.eval(p.ell, p.s, n + 1, 1) - g_lower);
        if (acc != bound)
            report.partial_sums_equal = false;
    }
    report.endpoint_equal = (bound == theorem_rhs(t, p));
    return report;
}

IdentityReport check_s0_reduction(Theorem t, long ell, long M) {
    IdentityParams params{ell, 0, M};
    params.validate();

    // Reduced-weight sum, computed from scratch.
    Rational inv_ell(1, ell);
    long l2 = ell * ell;
    Rational sum(0);
    for (long n = 0; n <= M; ++n) {
        Rational base = rising_factorial(inv_ell, n) * inv_rising_factorial(Rational(1), n);
        Rational w = (t == Theorem::One)
            ? Rational(2 * ell * n + 1) * Rational(l2 * n * n + ell * n + 1)
            : Rational(2 * ell * n + 1) * Rational(2 * l2 * n * n + 2 * ell * n + 1);
        Rational term = w * pow(base, t == Theorem::One ? 3 : 4);
        if (t == Theorem::One && n % 2 != 0)
            term = -term;
        sum += term;
    }

    // Pure-power closed form.
    Rational ratio = rising_factorial(Rational(ell + 1, ell), M)
                   * inv_rising_factorial(Rational(1), M);
    Rational closed = pow(ratio, t == Theorem::One ? 3 : 4);
    if (t == Theorem::One && M % 2 != 0)
        closed = -closed;

    IdentityReport report{t, params, sum, closed, false, {}};
    report.equal = (sum == closed)
                && (sum == theorem_lhs(t, params))
                && (closed == theorem_rhs(t, params));
    return report;
}

} // namespace wzsum
