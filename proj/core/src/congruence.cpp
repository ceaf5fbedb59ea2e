#include "wzsum/congruence.hpp"

#include <algorithm>
#include <array>

#include "wzsum/factorial.hpp"

namespace wzsum {

const char* family_name(SumFamily f) {
    return f == SumFamily::B ? "B" : "C";
}

const char* weight_name(WeightKind w) {
    switch (w) {
    case WeightKind::Linear: return "linear";
    case WeightKind::Cube: return "cube";
    case WeightKind::GuoB: return "guo-b";
    case WeightKind::GuoC: return "guo-c";
    }
    return "?";
}

const char* range_name(SumRange r) {
    return r == SumRange::Half ? "half" : "full";
}

const char* provenance_name(Provenance p) {
    return p == Provenance::ProvenRef ? "PROVEN-REF" : "CONJECTURE";
}

namespace {

// Largest supported p^r; keeps upper_index inside long range at desk scale.
constexpr long kMaxPrimePower = 2000000;

long prime_power(long p, int r) {
    long out = 1;
    for (int i = 0; i < r; ++i) {
        if (out > kMaxPrimePower / p)
            throw InvalidParameterError("CongruenceSpec: p^r exceeds desk scale");
        out *= p;
    }
    return out;
}

} // namespace

void CongruenceSpec::validate(bool allow_small_p) const {
    if (!is_odd_prime(p))
        throw InvalidParameterError("CongruenceSpec: p must be an odd prime");
    if (r < 1)
        throw InvalidParameterError("CongruenceSpec: r must be >= 1");
    if (weight == WeightKind::GuoB && family != SumFamily::B)
        throw InvalidParameterError("CongruenceSpec: guo-b weight pairs only with family B");
    if (weight == WeightKind::GuoC && family != SumFamily::C)
        throw InvalidParameterError("CongruenceSpec: guo-c weight pairs only with family C");
    if (!allow_small_p && family == SumFamily::C && p < 5
        && (weight == WeightKind::Linear || weight == WeightKind::Cube))
        throw InvalidParameterError("CongruenceSpec: family C with linear/cube weight requires p >= 5");
    prime_power(p, r);
}

long CongruenceSpec::upper_index() const {
    long pr = prime_power(p, r);
    return range == SumRange::Half ? (pr - 1) / 2 : pr - 1;
}

Integer weight_value(WeightKind w, long n) {
    Integer lin(4 * n + 1);
    switch (w) {
    case WeightKind::Linear: return lin;
    case WeightKind::Cube: return lin * lin * lin;
    case WeightKind::GuoB: return lin * Integer(4 * n * n + 2 * n + 1);
    case WeightKind::GuoC: return lin * Integer(8 * n * n + 4 * n + 1);
    }
    throw InvalidParameterError("weight_value: unknown weight");
}

Rational family_sum(SumFamily f, WeightKind w, long n_max) {
    if (n_max < 0)
        throw InvalidParameterError("family_sum: n_max must be >= 0");
    Rational term(1); // C(0,0)^d / base^0
    Rational total(0);
    for (long n = 0;; ++n) {
        total += Rational(weight_value(w, n)) * term;
        if (n == n_max)
            break;
        // C(2n+2,n+1)/C(2n,n) = 2(2n+1)/(n+1); cube or fourth power over the base.
        Integer odd(2 * n + 1);
        Integer next(n + 1);
        if (f == SumFamily::B)
            term *= Rational(-(odd * odd * odd), 8 * next * next * next);
        else
            term *= Rational(odd * odd * odd * odd, 16 * next * next * next * next);
    }
    return total;
}

Rational exact_sum(const CongruenceSpec& spec) {
    return family_sum(spec.family, spec.weight, spec.upper_index());
}

namespace {

int half_sign(long p, int r) {
    // (-1)^{(p-1)r/2}
    return (((p - 1) / 2) * static_cast<long>(r)) % 2 == 0 ? 1 : -1;
}

Integer int_pow(long p, int e) {
    return pow(Integer(p), static_cast<unsigned long>(e));
}

const std::array<CongruenceRule, 11>& rule_table() {
    static const std::array<CongruenceRule, 11> rules = {{
        {"vanhamme-B2", SumFamily::B, WeightKind::Linear, SumRange::Half, true, 3,
         Provenance::ProvenRef,
         [](int) -> unsigned { return 3; },
         [](long p, int) -> Integer { return Integer(half_sign(p, 1)) * p; }},
        {"B-linear-power", SumFamily::B, WeightKind::Linear, SumRange::Half, false, 3,
         Provenance::ProvenRef,
         [](int r) -> unsigned { return static_cast<unsigned>(r + 2); },
         [](long p, int r) -> Integer { return Integer(half_sign(p, r)) * int_pow(p, r); }},
        {"B-cube-mod-p2", SumFamily::B, WeightKind::Cube, SumRange::Half, true, 3,
         Provenance::ProvenRef,
         [](int) -> unsigned { return 2; },
         [](long p, int) -> Integer { return Integer(-3 * half_sign(p, 1)) * p; }},
        {"B-cube-power", SumFamily::B, WeightKind::Cube, SumRange::Half, false, 3,
         Provenance::ProvenRef,
         [](int) -> unsigned { return 3; },
         [](long p, int r) -> Integer { return Integer(-3 * half_sign(p, r)) * int_pow(p, r); }},
        {"B-guob-vanishing", SumFamily::B, WeightKind::GuoB, SumRange::Half, false, 3,
         Provenance::ProvenRef,
         [](int r) -> unsigned { return static_cast<unsigned>(r + 2); },
         [](long, int) -> Integer { return Integer(0); }},
        {"guo-conjecture-B", SumFamily::B, WeightKind::GuoB, SumRange::Half, false, 3,
         Provenance::Conjecture,
         [](int r) -> unsigned { return static_cast<unsigned>(3 * r + 1); },
         [](long p, int r) -> Integer { return int_pow(p, 3 * r); }},
        {"guo-conjecture-B", SumFamily::B, WeightKind::GuoB, SumRange::Full, false, 3,
         Provenance::Conjecture,
         [](int r) -> unsigned { return static_cast<unsigned>(3 * r + 1); },
         [](long p, int r) -> Integer { return int_pow(p, 3 * r); }},
        {"vanhamme-C2", SumFamily::C, WeightKind::Linear, SumRange::Half, true, 5,
         Provenance::ProvenRef,
         [](int) -> unsigned { return 4; },
         [](long p, int) -> Integer { return Integer(p); }},
        {"C-linear-power", SumFamily::C, WeightKind::Linear, SumRange::Half, false, 5,
         Provenance::ProvenRef,
         [](int r) -> unsigned { return static_cast<unsigned>(r + 3); },
         [](long p, int r) -> Integer { return int_pow(p, r); }},
        {"C-cube-power", SumFamily::C, WeightKind::Cube, SumRange::Half, false, 5,
         Provenance::ProvenRef,
         [](int r) -> unsigned { return static_cast<unsigned>(r + 3); },
         [](long p, int r) -> Integer { return -int_pow(p, r); }},
        {"guo-conjecture-C", SumFamily::C, WeightKind::GuoC, SumRange::Half, false, 3,
         Provenance::Conjecture,
         [](int r) -> unsigned { return static_cast<unsigned>(4 * r + 1); },
         [](long p, int r) -> Integer { return int_pow(p, 4 * r); }},
    }};
    return rules;
}

// guo-conjecture-C also covers the full range; represented as an extra row.
const CongruenceRule& guo_c_full_rule() {
    static const CongruenceRule rule = {
        "guo-conjecture-C", SumFamily::C, WeightKind::GuoC, SumRange::Full, false, 3,
        Provenance::Conjecture,
        [](int r) -> unsigned { return static_cast<unsigned>(4 * r + 1); },
        [](long p, int r) -> Integer { return int_pow(p, 4 * r); }};
    return rule;
}

std::vector<CongruenceRule> build_full_table() {
    std::vector<CongruenceRule> all(rule_table().begin(), rule_table().end());
    all.push_back(guo_c_full_rule());
    return all;
}

} // namespace

std::span<const CongruenceRule> congruence_rules() {
    static const std::vector<CongruenceRule> all = build_full_table();
    return all;
}

bool CongruenceRule::matches(const CongruenceSpec& spec, bool allow_small_p) const {
    if (spec.family != family || spec.weight != weight || spec.range != range)
        return false;
    if (r_one_only && spec.r != 1)
        return false;
    if (!allow_small_p && spec.p < min_p)
        return false;
    return true;
}

ExpectedResidue CongruenceRule::expected(long p, int r) const {
    unsigned e = modulus_exponent(r);
    PrimePowerModulus m(p, e);
    Integer value = rhs_value(p, r) % m.modulus();
    if (value < 0)
        value += m.modulus();
    return {value, e, name, provenance};
}

ExpectedResidue expected_residue(const CongruenceSpec& spec, bool allow_small_p) {
    // Structural validation only; the p >= 5 hypothesis surfaces as an
    // UnsupportedSpecError below when no rule matches.
    spec.validate(true);
    const CongruenceRule* best = nullptr;
    unsigned best_exponent = 0;
    for (const CongruenceRule& rule : congruence_rules()) {
        if (!rule.matches(spec, allow_small_p))
            continue;
        unsigned e = rule.modulus_exponent(spec.r);
        if (best == nullptr || e > best_exponent) {
            best = &rule;
            best_exponent = e;
        }
    }
    if (best == nullptr)
        throw UnsupportedSpecError(std::string("expected_residue: no stated congruence for family ")
                                   + family_name(spec.family) + ", weight " + weight_name(spec.weight)
                                   + ", range " + range_name(spec.range)
                                   + ", r=" + std::to_string(spec.r)
                                   + ", p=" + std::to_string(spec.p));
    return best->expected(spec.p, spec.r);
}

CongruenceReport check_congruence(const CongruenceSpec& spec, bool allow_small_p) {
    ExpectedResidue want = expected_residue(spec, allow_small_p);
    CongruenceReport report;
    report.spec = spec;
    report.sum = exact_sum(spec);
    PrimePowerModulus m(spec.p, want.exponent);
    report.modulus = m.modulus();
    report.residue = mod_reduce(report.sum, m);
    report.expected = want.residue;
    report.pass = (report.residue == report.expected);
    report.rule = want.rule;
    report.provenance = want.provenance;
    return report;
}

CongruenceReport check_against_rule(const CongruenceSpec& spec, const CongruenceRule& rule) {
    if (spec.family != rule.family || spec.weight != rule.weight || spec.range != rule.range)
        throw InvalidParameterError("check_against_rule: rule '" + rule.name
                                    + "' does not cover this spec shape");
    ExpectedResidue want = rule.expected(spec.p, spec.r);
    CongruenceReport report;
    report.spec = spec;
    report.sum = exact_sum(spec);
    PrimePowerModulus m(spec.p, want.exponent);
    report.modulus = m.modulus();
    report.residue = mod_reduce(report.sum, m);
    report.expected = want.residue;
    report.pass = (report.residue == report.expected);
    report.rule = want.rule;
    report.provenance = want.provenance;
    return report;
}

bool bridge_check(long n_max) {
    Rational half(1, 2);
    for (long n = 0; n <= n_max; ++n) {
        Rational quotient = rising_factorial(half, n) / rising_factorial(Rational(1), n);
        Rational cb(central_binomial(static_cast<unsigned long>(n)));

        if (cb / pow(Rational(4), n) != quotient)
            return false;
        Rational cube = pow(cb, 3) / pow(Rational(-64), n);
        Rational sign(n % 2 == 0 ? 1 : -1);
        if (cube != sign * pow(quotient, 3))
            return false;
        Rational quartic = pow(cb, 4) / pow(Rational(256), n);
        if (quartic != pow(quotient, 4))
            return false;
    }
    return true;
}

} // namespace wzsum
