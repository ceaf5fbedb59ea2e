#pragma once

#include <span>
#include <string>
#include <vector>

#include "wzsum/modular.hpp"
#include "wzsum/rational.hpp"

namespace wzsum {

/// The two binomial sum families:
///   B: sum of weight(n) * C(2n,n)^3 / (-64)^n
///   C: sum of weight(n) * C(2n,n)^4 / 256^n
enum class SumFamily { B, C };

/// Weight polynomials:
///   Linear = 4n+1, Cube = (4n+1)^3,
///   GuoB = (4n+1)(4n^2+2n+1)  (family B only),
///   GuoC = (4n+1)(8n^2+4n+1)  (family C only).
enum class WeightKind { Linear, Cube, GuoB, GuoC };

/// Summation range: Half is n <= (p^r-1)/2, Full is n <= p^r-1.
enum class SumRange { Half, Full };

const char* family_name(SumFamily f);
const char* weight_name(WeightKind w);
const char* range_name(SumRange r);

/// One supercongruence instance.
struct CongruenceSpec {
    SumFamily family;
    WeightKind weight;
    long p;
    int r;
    SumRange range;

    /// Validates the parameter combination. With allow_small_p the p >= 5
    /// requirement on family-C Linear/Cube specs is waived (results for
    /// such specs are reported, never asserted).
    void validate(bool allow_small_p = false) const;

    /// Index of the last summand.
    long upper_index() const;
};

Integer weight_value(WeightKind w, long n);

/// Exact value of sum_{n=0}^{n_max} weight(n) * C(2n,n)^d / base^n with
/// (d, base) = (3, -64) for family B and (4, 256) for family C. The running
/// term is updated by the exact term ratio; no binomial coefficient is
/// recomputed.
Rational family_sum(SumFamily f, WeightKind w, long n_max);

/// family_sum over the spec's range.
Rational exact_sum(const CongruenceSpec& spec);

enum class Provenance { ProvenRef, Conjecture };

const char* provenance_name(Provenance p);

struct ExpectedResidue {
    Integer residue;    // reduced into [0, p^e)
    unsigned exponent;  // e of the modulus p^e
    std::string rule;
    Provenance provenance;
};

/// One stated congruence shape: which (family, weight, range) it covers,
/// its constraints on p and r, and its right-hand side.
struct CongruenceRule {
    std::string name;
    SumFamily family;
    WeightKind weight;
    SumRange range;
    bool r_one_only;
    long min_p;
    Provenance provenance;
    unsigned (*modulus_exponent)(int r);
    Integer (*rhs_value)(long p, int r); // may be negative; reduced by callers

    bool matches(const CongruenceSpec& spec, bool allow_small_p = false) const;
    ExpectedResidue expected(long p, int r) const;
};

/// The fixed table of stated congruences.
std::span<const CongruenceRule> congruence_rules();

/// The strongest stated congruence for the spec (largest modulus exponent).
/// Throws UnsupportedSpecError when the table has no match.
ExpectedResidue expected_residue(const CongruenceSpec& spec, bool allow_small_p = false);

struct CongruenceReport {
    CongruenceSpec spec;
    Rational sum;
    Integer modulus;
    Integer residue;
    Integer expected;
    bool pass = false;
    std::string rule;
    Provenance provenance = Provenance::ProvenRef;
};

CongruenceReport check_congruence(const CongruenceSpec& spec, bool allow_small_p = false);

/// Checks a spec's sum against one specific rule (the rule must match the
/// spec's family/weight/range shape).
CongruenceReport check_against_rule(const CongruenceSpec& spec, const CongruenceRule& rule);

/// True iff for all n <= n_max, exactly:
///   C(2n,n)/4^n = (1/2)_n/(1)_n,
///   C(2n,n)^3/(-64)^n = (-1)^n (1/2)_n^3/(1)_n^3,
///   C(2n,n)^4/256^n = (1/2)_n^4/(1)_n^4.
bool bridge_check(long n_max);

} // namespace wzsum
