#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wzsum/mpoly.hpp"
#include "wzsum/rational.hpp"

namespace wzsum {

/// The two hypergeometric certificate pairs.
enum class CertificateId { WzPair, ZeilbergerPair };

const char* certificate_name(CertificateId id);

/// One lattice point (ell, s, n, k) in a certificate's domain.
/// Hypotheses: ell >= 1, s >= 0, n >= s, n >= k.
struct TermPoint {
    long ell;
    long s;
    long n;
    long k;

    void validate() const;
};

/// An integer-linear index c_n*n + c_k*k + c_s*s + c into a rising factorial.
struct LinearIndex {
    int n = 0;
    int k = 0;
    int s = 0;
    int c = 0;

    long at(long nv, long kv, long sv) const {
        return static_cast<long>(n) * nv + static_cast<long>(k) * kv
             + static_cast<long>(s) * sv + c;
    }

    std::string to_string() const;
};

/// Base argument of a rising-factorial factor: 1 or 1/ell.
enum class FactorBase { One, InvEll };

struct Factor {
    FactorBase base;
    LinearIndex index;
};

/// Sign (-1)^(c_n*n + c_k*k + c).
struct SignRule {
    int n = 0;
    int k = 0;
    int c = 0;

    int at(long nv, long kv) const {
        long e = static_cast<long>(n) * nv + static_cast<long>(k) * kv + c;
        return (e % 2 + 2) % 2 == 0 ? 1 : -1;
    }
};

/// scale * (2*ell*n + 1 if enabled) * ell^ell_power.
struct Prefactor {
    int scale = 1;
    bool two_ell_n_plus_one = false;
    int ell_power = 0;

    Rational at(long ell, long nv) const;
};

/// Structural description of one hypergeometric term: a sign, a prefactor,
/// rising-factorial factors in the numerator and reciprocal factors in the
/// denominator. Reciprocal factors follow the convention 1/(1)_m = 0 for
/// m < 0, so the term value vanishes instead of blowing up there.
struct HypergeometricTerm {
    SignRule sign;
    Prefactor prefactor;
    std::vector<Factor> numerator;
    std::vector<Factor> reciprocals;

    /// Exact value at (ell, s, n, k). PoleError only if a numerator factor
    /// hits a negative-index pole.
    Rational eval(long ell, long s, long n, long k) const;

    std::string to_string() const;
};

/// A certificate pair (F, G) with its recurrence multipliers p(k), q(k):
///   p(k) F(n,k-1) - q(k) F(n,k) = G(n+1,k) - G(n,k).
struct CertificatePair {
    CertificateId id;
    HypergeometricTerm F;
    HypergeometricTerm G;
    MPoly p_mult; // polynomial in L, k
    MPoly q_mult;

    std::string to_string() const;
};

/// The built-in certificates. WzPair has p = q = 1; ZeilbergerPair has
/// p(k) = L*k - L + 1, q(k) = L*k - L + 2.
const CertificatePair& certificate(CertificateId id);

/// F at a point satisfying the TermPoint hypotheses.
Rational eval_F(CertificateId id, const TermPoint& pt);

/// G at a point; n >= s is not required (G vanishes at n = s, k = 1).
Rational eval_G(CertificateId id, const TermPoint& pt);

/// Exact recurrence check at one point; requires k >= 1.
bool check_recurrence_pointwise(const CertificatePair& pair, const TermPoint& pt);
bool check_recurrence_pointwise(CertificateId id, const TermPoint& pt);

/// The proof's three term ratios as rational functions of (L, n, k, s):
///   f_shift = F(n,k-1)/F(n,k), g_up = G(n+1,k)/F(n,k), g_same = G(n,k)/F(n,k).
struct RatioTriple {
    RationalFunction f_shift;
    RationalFunction g_up;
    RationalFunction g_same;
};

RatioTriple ratio_triple(CertificateId id);

/// p(k)*f_shift - q(k) - (g_up - g_same) as a rational function; the
/// certificate's ratio identity holds iff its numerator is the zero polynomial.
RationalFunction symbolic_defect(CertificateId id);

/// True iff the ratio identity holds as an exact polynomial identity after
/// cross-multiplication.
bool verify_certificate_symbolic(CertificateId id);

enum class CheckOutcome { Pass, Fail, Skip };

/// Compares term-level evaluation against the symbolic ratios at one point.
/// Skip when F(n,k) = 0, a ratio denominator vanishes, or k < 1.
CheckOutcome check_ratio_consistency(CertificateId id, const TermPoint& pt);

/// A named single-element perturbation of a certificate, used to confirm
/// that the pointwise recurrence check detects structural damage.
struct CertificateMutation {
    std::string name;
    CertificateId target;
    std::function<void(CertificatePair&)> apply;
};

/// Ten canned mutations covering signs, factor indices, and prefactors.
const std::vector<CertificateMutation>& canned_mutations();

/// A copy of the target certificate with the mutation applied.
CertificatePair apply_mutation(const CertificateMutation& mutation);

} // namespace wzsum
