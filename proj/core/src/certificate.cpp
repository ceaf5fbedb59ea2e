#include "wzsum/certificate.hpp"

#include <sstream>

#include "wzsum/factorial.hpp"

namespace wzsum {

const char* certificate_name(CertificateId id) {
    return id == CertificateId::WzPair ? "wz" : "zeilberger";
}

void TermPoint::validate() const {
    if (ell < 1)
        throw InvalidParameterError("TermPoint: ell must be >= 1");
    if (s < 0)
        throw InvalidParameterError("TermPoint: s must be >= 0");
    if (n < s)
        throw InvalidParameterError("TermPoint: n must be >= s");
    if (n < k)
        throw InvalidParameterError("TermPoint: n must be >= k");
}

std::string LinearIndex::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int coeff, const char* name) {
        if (coeff == 0)
            return;
        if (first) {
            if (coeff < 0)
                os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? "-" : "+");
        }
        if (std::abs(coeff) != 1)
            os << std::abs(coeff) << "*";
        os << name;
    };
    emit(n, "n");
    emit(k, "k");
    emit(s, "s");
    if (c != 0 || first) {
        if (first)
            os << c;
        else
            os << (c < 0 ? "-" : "+") << std::abs(c);
    }
    return os.str();
}

Rational Prefactor::at(long ell, long nv) const {
    Rational out(scale);
    if (two_ell_n_plus_one)
        out *= Rational(2 * ell * nv + 1);
    for (int i = 0; i < ell_power; ++i)
        out *= Rational(ell);
    return out;
}

Rational HypergeometricTerm::eval(long ell, long s, long n, long k) const {
    Rational inv_ell(1, ell);
    auto base_value = [&](FactorBase b) { return b == FactorBase::One ? Rational(1) : inv_ell; };

    Rational out(sign.at(n, k));
    out *= prefactor.at(ell, n);
    for (const Factor& f : numerator)
        out *= rising_factorial(base_value(f.base), f.index.at(n, k, s));
    for (const Factor& f : reciprocals)
        out *= inv_rising_factorial(base_value(f.base), f.index.at(n, k, s));
    return out;
}

namespace {

std::string factor_string(const Factor& f) {
    std::string base = f.base == FactorBase::One ? "1" : "1/L";
    return "(" + base + ")_(" + f.index.to_string() + ")";
}

std::string sign_string(const SignRule& s) {
    LinearIndex as_index{s.n, s.k, 0, s.c};
    return "(-1)^(" + as_index.to_string() + ")";
}

} // namespace

std::string HypergeometricTerm::to_string() const {
    std::ostringstream os;
    os << sign_string(sign);
    if (prefactor.scale != 1)
        os << " * " << prefactor.scale;
    if (prefactor.two_ell_n_plus_one)
        os << " * (2*L*n+1)";
    if (prefactor.ell_power == 1)
        os << " * L";
    else if (prefactor.ell_power > 1)
        os << " * L^" << prefactor.ell_power;
    os << " * ";
    for (size_t i = 0; i < numerator.size(); ++i)
        os << (i ? " " : "") << factor_string(numerator[i]);
    os << " / [";
    for (size_t i = 0; i < reciprocals.size(); ++i)
        os << (i ? " " : "") << factor_string(reciprocals[i]);
    os << "]";
    return os.str();
}

std::string CertificatePair::to_string() const {
    std::ostringstream os;
    os << "certificate " << certificate_name(id) << "\n"
       << "  F(n,k) = " << F.to_string() << "\n"
       << "  G(n,k) = " << G.to_string() << "\n"
       << "  p(k) = " << p_mult.to_string() << ", q(k) = " << q_mult.to_string();
    return os.str();
}

namespace {

CertificatePair make_wz_pair() {
    CertificatePair pair;
    pair.id = CertificateId::WzPair;

    // F(n,k) = (-1)^(n+k) (2Ln+1) (1/L)_{n+s}(1/L)_{n-s}(1/L)_{n+k}
    //          / [(1)_{n+s}(1)_{n-s}(1)_{n-k}(1/L)_{k+s}(1/L)_{k-s}]
    pair.F.sign = {1, 1, 0};
    pair.F.prefactor = {1, true, 0};
    pair.F.numerator = {
        {FactorBase::InvEll, {1, 0, 1, 0}},  // (1/L)_{n+s}
        {FactorBase::InvEll, {1, 0, -1, 0}}, // (1/L)_{n-s}
        {FactorBase::InvEll, {1, 1, 0, 0}},  // (1/L)_{n+k}
    };
    pair.F.reciprocals = {
        {FactorBase::One, {1, 0, 1, 0}},     // (1)_{n+s}
        {FactorBase::One, {1, 0, -1, 0}},    // (1)_{n-s}
        {FactorBase::One, {1, -1, 0, 0}},    // (1)_{n-k}
        {FactorBase::InvEll, {0, 1, 1, 0}},  // (1/L)_{k+s}
        {FactorBase::InvEll, {0, 1, -1, 0}}, // (1/L)_{k-s}
    };

    // G(n,k) = (-1)^(n+k) L (1/L)_{n+s}(1/L)_{n-s}(1/L)_{n+k-1}
    //          / [(1)_{n+s-1}(1)_{n-s-1}(1)_{n-k}(1/L)_{k+s}(1/L)_{k-s}]
    pair.G.sign = {1, 1, 0};
    pair.G.prefactor = {1, false, 1};
    pair.G.numerator = {
        {FactorBase::InvEll, {1, 0, 1, 0}},
        {FactorBase::InvEll, {1, 0, -1, 0}},
        {FactorBase::InvEll, {1, 1, 0, -1}}, // (1/L)_{n+k-1}
    };
    pair.G.reciprocals = {
        {FactorBase::One, {1, 0, 1, -1}},    // (1)_{n+s-1}
        {FactorBase::One, {1, 0, -1, -1}},   // (1)_{n-s-1}
        {FactorBase::One, {1, -1, 0, 0}},
        {FactorBase::InvEll, {0, 1, 1, 0}},
        {FactorBase::InvEll, {0, 1, -1, 0}},
    };

    pair.p_mult = MPoly(Rational(1));
    pair.q_mult = MPoly(Rational(1));
    return pair;
}

CertificatePair make_zeilberger_pair() {
    CertificatePair pair;
    pair.id = CertificateId::ZeilbergerPair;

    // F(n,k) = (-1)^k (2Ln+1) (1/L)_{n+s}(1/L)_{n-s}(1/L)_n(1/L)_{n+k}
    //          / [(1)_{n+s}(1)_{n-s}(1)_n(1)_{n-k}(1/L)_{k+s}(1/L)_{k-s}]
    pair.F.sign = {0, 1, 0};
    pair.F.prefactor = {1, true, 0};
    pair.F.numerator = {
        {FactorBase::InvEll, {1, 0, 1, 0}},
        {FactorBase::InvEll, {1, 0, -1, 0}},
        {FactorBase::InvEll, {1, 0, 0, 0}},  // (1/L)_n
        {FactorBase::InvEll, {1, 1, 0, 0}},
    };
    pair.F.reciprocals = {
        {FactorBase::One, {1, 0, 1, 0}},
        {FactorBase::One, {1, 0, -1, 0}},
        {FactorBase::One, {1, 0, 0, 0}},     // (1)_n
        {FactorBase::One, {1, -1, 0, 0}},
        {FactorBase::InvEll, {0, 1, 1, 0}},
        {FactorBase::InvEll, {0, 1, -1, 0}},
    };

    // G(n,k) = (-1)^(k-1) L^2 (1/L)_{n+s}(1/L)_{n-s}(1/L)_n(1/L)_{n+k-1}
    //          / [(1)_{n+s-1}(1)_{n-s-1}(1)_{n-1}(1)_{n-k}(1/L)_{k+s}(1/L)_{k-s}]
    pair.G.sign = {0, 1, 1};
    pair.G.prefactor = {1, false, 2};
    pair.G.numerator = {
        {FactorBase::InvEll, {1, 0, 1, 0}},
        {FactorBase::InvEll, {1, 0, -1, 0}},
        {FactorBase::InvEll, {1, 0, 0, 0}},
        {FactorBase::InvEll, {1, 1, 0, -1}},
    };
    pair.G.reciprocals = {
        {FactorBase::One, {1, 0, 1, -1}},
        {FactorBase::One, {1, 0, -1, -1}},
        {FactorBase::One, {1, 0, 0, -1}},    // (1)_{n-1}
        {FactorBase::One, {1, -1, 0, 0}},
        {FactorBase::InvEll, {0, 1, 1, 0}},
        {FactorBase::InvEll, {0, 1, -1, 0}},
    };

    // p(k) = L*k - L + 1, q(k) = L*k - L + 2
    MPoly L = MPoly::variable(Var::L);
    MPoly K = MPoly::variable(Var::K);
    MPoly one = MPoly(Rational(1));
    pair.p_mult = L * K - L + one;
    pair.q_mult = L * K - L + one + one;
    return pair;
}

} // namespace

const CertificatePair& certificate(CertificateId id) {
    static const CertificatePair wz = make_wz_pair();
    static const CertificatePair zb = make_zeilberger_pair();
    return id == CertificateId::WzPair ? wz : zb;
}

Rational eval_F(CertificateId id, const TermPoint& pt) {
    pt.validate();
    return certificate(id).F.eval(pt.ell, pt.s, pt.n, pt.k);
}

Rational eval_G(CertificateId id, const TermPoint& pt) {
    // G is also needed at n = s (where it vanishes); only require the
    // parameter bounds, not n >= s.
    if (pt.ell < 1 || pt.s < 0 || pt.k < 0)
        throw InvalidParameterError("eval_G: requires ell >= 1, s >= 0, k >= 0");
    return certificate(id).G.eval(pt.ell, pt.s, pt.n, pt.k);
}

bool check_recurrence_pointwise(const CertificatePair& pair, const TermPoint& pt) {
    pt.validate();
    if (pt.k < 1)
        throw InvalidParameterError("check_recurrence_pointwise: requires k >= 1");

    EvalPoint mult_pt;
    mult_pt.set(Var::L, Rational(pt.ell)).set(Var::K, Rational(pt.k));
    Rational p = pair.p_mult.eval(mult_pt);
    Rational q = pair.q_mult.eval(mult_pt);

    Rational lhs = p * pair.F.eval(pt.ell, pt.s, pt.n, pt.k - 1)
                 - q * pair.F.eval(pt.ell, pt.s, pt.n, pt.k);
    Rational rhs = pair.G.eval(pt.ell, pt.s, pt.n + 1, pt.k)
                 - pair.G.eval(pt.ell, pt.s, pt.n, pt.k);
    return lhs == rhs;
}

bool check_recurrence_pointwise(CertificateId id, const TermPoint& pt) {
    return check_recurrence_pointwise(certificate(id), pt);
}

RatioTriple ratio_triple(CertificateId id) {
    const MPoly L = MPoly::variable(Var::L);
    const MPoly N = MPoly::variable(Var::N);
    const MPoly K = MPoly::variable(Var::K);
    const MPoly S = MPoly::variable(Var::S);
    const MPoly one = MPoly(Rational(1));

    // Shared pieces, with (1-L)/L cleared into the denominators.
    const MPoly ks_plus = L * K + L * S + one - L;  // L*(k+s+(1-L)/L)
    const MPoly ks_minus = L * K - L * S + one - L;
    const MPoly nk_shift = L * N + L * K + one - L; // L*(n+k+(1-L)/L)
    const MPoly down = N - K + one;                 // n-k+1
    const MPoly ns_plus = L * N + L * S + one;      // L*(n+1/L+s)
    const MPoly ns_minus = L * N - L * S + one;
    const MPoly two_ln = Rational(2) * L * N + one; // 2Ln+1

    RatioTriple out;
    out.f_shift = RationalFunction(-(ks_plus * ks_minus), L * nk_shift * down);
    if (id == CertificateId::WzPair) {
        out.g_up = RationalFunction(-(ns_plus * ns_minus), L * two_ln * down);
        out.g_same = RationalFunction(L * L * (N * N - S * S), two_ln * nk_shift);
    } else {
        out.g_up = RationalFunction(-(ns_plus * ns_minus * (L * N + one)), L * two_ln * down);
        out.g_same = RationalFunction(-(L * L * L * (N * N * N - N * S * S)), two_ln * nk_shift);
    }
    return out;
}

RationalFunction symbolic_defect(CertificateId id) {
    const CertificatePair& pair = certificate(id);
    RatioTriple rt = ratio_triple(id);
    RationalFunction lhs = RationalFunction(pair.p_mult) * rt.f_shift - RationalFunction(pair.q_mult);
    RationalFunction rhs = rt.g_up - rt.g_same;
    return lhs - rhs;
}

bool verify_certificate_symbolic(CertificateId id) {
    return symbolic_defect(id).num().is_zero();
}

CheckOutcome check_ratio_consistency(CertificateId id, const TermPoint& pt) {
    pt.validate();
    if (pt.k < 1)
        return CheckOutcome::Skip;

    const CertificatePair& pair = certificate(id);
    Rational f = pair.F.eval(pt.ell, pt.s, pt.n, pt.k);
    if (f.is_zero())
        return CheckOutcome::Skip;

    EvalPoint ep = EvalPoint::all(Rational(pt.ell), Rational(pt.n), Rational(pt.k), Rational(pt.s));
    RatioTriple rt = ratio_triple(id);
    auto r1 = rt.f_shift.try_eval(ep);
    auto r2 = rt.g_up.try_eval(ep);
    auto r3 = rt.g_same.try_eval(ep);
    if (!r1 || !r2 || !r3)
        return CheckOutcome::Skip;

    bool ok = (pair.F.eval(pt.ell, pt.s, pt.n, pt.k - 1) / f == *r1)
           && (pair.G.eval(pt.ell, pt.s, pt.n + 1, pt.k) / f == *r2)
           && (pair.G.eval(pt.ell, pt.s, pt.n, pt.k) / f == *r3);
    return ok ? CheckOutcome::Pass : CheckOutcome::Fail;
}

const std::vector<CertificateMutation>& canned_mutations() {
    static const std::vector<CertificateMutation> mutations = {
        {"wz-F-sign-flip", CertificateId::WzPair,
         [](CertificatePair& p) { p.F.sign.c += 1; }},
        {"wz-F-drop-linear-prefactor", CertificateId::WzPair,
         [](CertificatePair& p) { p.F.prefactor.two_ell_n_plus_one = false; }},
        {"wz-G-ell-power-bump", CertificateId::WzPair,
         [](CertificatePair& p) { p.G.prefactor.ell_power = 2; }},
        {"wz-G-numerator-index-shift", CertificateId::WzPair,
         [](CertificatePair& p) { p.G.numerator[2].index.c = 0; }},
        {"wz-G-doubled", CertificateId::WzPair,
         [](CertificatePair& p) { p.G.prefactor.scale = 2; }},
        {"zb-F-sign-gains-n", CertificateId::ZeilbergerPair,
         [](CertificatePair& p) { p.F.sign.n = 1; }},
        {"zb-G-sign-flip", CertificateId::ZeilbergerPair,
         [](CertificatePair& p) { p.G.sign.c = 0; }},
        {"zb-F-reciprocal-index-shift", CertificateId::ZeilbergerPair,
         [](CertificatePair& p) { p.F.reciprocals[3].index.c = 1; }},
        {"zb-G-ell-power-drop", CertificateId::ZeilbergerPair,
         [](CertificatePair& p) { p.G.prefactor.ell_power = 1; }},
        {"zb-G-doubled", CertificateId::ZeilbergerPair,
         [](CertificatePair& p) { p.G.prefactor.scale = 2; }},
    };
    return mutations;
}

CertificatePair apply_mutation(const CertificateMutation& mutation) {
    CertificatePair copy = certificate(mutation.target);
    mutation.apply(copy);
    return copy;
}

} // namespace wzsum
