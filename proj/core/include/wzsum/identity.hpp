#pragma once

#include <vector>

#include "wzsum/rational.hpp"

namespace wzsum {

/// The two closed-form telescoping identities. One is the alternating sum
/// with a triple rising-factorial quotient; Two is the positive sum with a
/// quadruple quotient.
enum class Theorem { One = 1, Two = 2 };

/// Parameters (ell, s, M): ell >= 1, s >= 0, M >= s. The sum runs n = s..M.
struct IdentityParams {
    long ell;
    long s;
    long M;

    void validate() const;
};

/// The n-th summand of the theorem's sum.
Rational theorem_summand(Theorem t, const IdentityParams& p, long n);

/// Left side: direct summation of the summands, term by term.
Rational theorem_lhs(Theorem t, const IdentityParams& p);

/// Right side: the closed-form rising-factorial quotient. Computed on an
/// independent code path from theorem_lhs (no shared factorial caching).
Rational theorem_rhs(Theorem t, const IdentityParams& p);

struct IdentityReport {
    Theorem theorem;
    IdentityParams params;
    Rational lhs;
    Rational rhs;
    bool equal = false;
    std::vector<Rational> trace; // per-term summands, filled only on request
};

IdentityReport verify_identity(Theorem t, const IdentityParams& p, bool with_trace = false);

/// Result of replaying the telescoping proof:
///   multiplier  c = ell^2 (1/ell)_{1+s} (1/ell)_{1-s},
///   termwise    c*(F(n,0) - q*F(n,1)) == summand(n) for every n,
///   partial sums  sum_{n=s}^{m} summand == c*(G(m+1,1) - G(s,1)) for every m,
///   endpoint    the final bound equals the closed form.
/// When c has a pole (ell = 1, s >= 2) the replay is not applicable; the
/// identity itself is still checkable through verify_identity.
struct ReplayReport {
    Theorem theorem;
    IdentityParams params;
    bool applicable = false;
    bool termwise_equal = false;
    bool partial_sums_equal = false;
    bool endpoint_equal = false;
    Rational multiplier;

    bool all_checks() const {
        return applicable && termwise_equal && partial_sums_equal && endpoint_equal;
    }
};

ReplayReport replay_telescoping_proof(Theorem t, const IdentityParams& p);

/// Verifies the s = 0 specialization against an independently computed sum
/// with the reduced weight and the pure-power closed form.
IdentityReport check_s0_reduction(Theorem t, long ell, long M);

} // namespace wzsum
