#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/oracle.hpp"
#include "wzsum/identity.hpp"

using namespace wzsum;

TEST_CASE("parameter hypotheses") {
    CHECK_NOTHROW((IdentityParams{1, 0, 0}.validate()));
    CHECK_THROWS_AS((IdentityParams{0, 0, 0}.validate()), InvalidParameterError);
    CHECK_THROWS_AS((IdentityParams{1, -1, 0}.validate()), InvalidParameterError);
    CHECK_THROWS_AS((IdentityParams{1, 2, 1}.validate()), InvalidParameterError); // M < s
}

TEST_CASE("pinned values, theorem 1") {
    CHECK(theorem_lhs(Theorem::One, {1, 0, 0}) == Rational(1));
    CHECK(theorem_rhs(Theorem::One, {1, 0, 0}) == Rational(1));
    CHECK(theorem_lhs(Theorem::One, {1, 1, 1}) == Rational(-6));
    CHECK(theorem_rhs(Theorem::One, {1, 1, 1}) == Rational(-6));
    CHECK(theorem_lhs(Theorem::One, {2, 0, 1}) == Rational(-27, 8));
    CHECK(theorem_rhs(Theorem::One, {2, 0, 1}) == Rational(-27, 8));
    // larger case, frozen from the brute-force oracle
    Rational big = Rational::from_string("-240762403481600/22876792454961");
    CHECK(theorem_lhs(Theorem::One, {3, 2, 7}) == big);
    CHECK(theorem_rhs(Theorem::One, {3, 2, 7}) == big);
}

TEST_CASE("pinned values, theorem 2") {
    CHECK(theorem_lhs(Theorem::Two, {1, 0, 0}) == Rational(1));
    CHECK(theorem_rhs(Theorem::Two, {1, 0, 0}) == Rational(1));
    CHECK(theorem_lhs(Theorem::Two, {1, 1, 1}) == Rational(12));
    CHECK(theorem_rhs(Theorem::Two, {1, 1, 1}) == Rational(12));
    CHECK(theorem_lhs(Theorem::Two, {2, 0, 1}) == Rational(81, 16));
    CHECK(theorem_rhs(Theorem::Two, {2, 0, 1}) == Rational(81, 16));
    Rational big = Rational::from_string(
        "36070602427611770886274762265625/2535301200456458802993406410752");
    CHECK(theorem_lhs(Theorem::Two, {4, 1, 9}) == big);
    CHECK(theorem_rhs(Theorem::Two, {4, 1, 9}) == big);
}

TEST_CASE("verify_identity") {
    IdentityReport r1 = verify_identity(Theorem::One, {3, 2, 7});
    CHECK(r1.equal);
    IdentityReport r2 = verify_identity(Theorem::Two, {4, 1, 9});
    CHECK(r2.equal);

    IdentityReport traced = verify_identity(Theorem::One, {2, 1, 4}, true);
    CHECK(traced.trace.size() == 4);
    Rational total(0);
    for (const Rational& t : traced.trace)
        total += t;
    CHECK(total == traced.lhs);

    IdentityReport untraced = verify_identity(Theorem::One, {2, 1, 4});
    CHECK(untraced.trace.empty());
}

TEST_CASE("a mutated weight is detected") {
    // drop the -l^2 s^2 part of the weight: the sum must no longer match the
    // closed form
    IdentityParams p{2, 1, 3};
    mpq_class wrong = 0;
    for (long n = p.s; n <= p.M; ++n) {
        mpq_class il(1, p.ell);
        mpq_class w = mpq_class(2 * p.ell * n + 1) * (p.ell * p.ell * n * n + p.ell * n + 1);
        mpq_class t = oracle::rf(il, n + p.s) * oracle::rf(il, n - p.s)
                    / (oracle::rf(1, n + p.s) * oracle::rf(1, n - p.s));
        t *= oracle::rf(il, n) / oracle::rf(1, n);
        if (n % 2 != 0)
            w = -w;
        wrong += w * t;
    }
    mpq_class right = oracle::theorem_closed(1, p.ell, p.s, p.M);
    CHECK(wrong != right);
}

TEST_CASE("identity grid against the oracle") {
    for (long ell = 1; ell <= 4; ++ell)
        for (long s = 0; s <= 3; ++s)
            for (long M = s; M <= s + 8; ++M) {
                IdentityParams p{ell, s, M};
                Rational lhs1 = theorem_lhs(Theorem::One, p);
                CHECK(lhs1.numerator() == oracle::theorem_sum(1, ell, s, M).get_num());
                CHECK(lhs1 == theorem_rhs(Theorem::One, p));
                Rational lhs2 = theorem_lhs(Theorem::Two, p);
                CHECK(lhs2.numerator() == oracle::theorem_sum(2, ell, s, M).get_num());
                CHECK(lhs2 == theorem_rhs(Theorem::Two, p));
            }
}

TEST_CASE("telescoping replay") {
    ReplayReport r1 = replay_telescoping_proof(Theorem::One, {2, 1, 4});
    CHECK(r1.applicable);
    CHECK(r1.termwise_equal);
    CHECK(r1.partial_sums_equal);
    CHECK(r1.endpoint_equal);
    CHECK(r1.multiplier == Rational(3)); // 4 * (1/2)_2 * (1/2)_0 = 3

    ReplayReport r2 = replay_telescoping_proof(Theorem::Two, {3, 0, 5});
    CHECK(r2.all_checks());
    CHECK(r2.multiplier == Rational(1)); // 9 * (1/3)_1 * (1/3)_1 = 1

    ReplayReport smallest = replay_telescoping_proof(Theorem::One, {1, 0, 0});
    CHECK(smallest.all_checks());

    ReplayReport big_s = replay_telescoping_proof(Theorem::One, {2, 3, 6});
    CHECK(big_s.all_checks());
    CHECK(big_s.multiplier == Rational(35)); // 4 * (1/2)_4 * (1/2)_{-2} = 35
}

TEST_CASE("replay is not applicable when the multiplier has a pole") {
    // (1)_{1-s} is infinite for ell = 1, s >= 2
    ReplayReport na = replay_telescoping_proof(Theorem::One, {1, 2, 5});
    CHECK_FALSE(na.applicable);
    ReplayReport na2 = replay_telescoping_proof(Theorem::Two, {1, 3, 6});
    CHECK_FALSE(na2.applicable);
    // the identity itself still holds there
    CHECK(verify_identity(Theorem::One, {1, 2, 5}).equal);
    CHECK(verify_identity(Theorem::Two, {1, 3, 6}).equal);
    // s = 1 is fine at ell = 1
    CHECK(replay_telescoping_proof(Theorem::One, {1, 1, 4}).all_checks());
}

TEST_CASE("replay across a grid") {
    for (long ell = 1; ell <= 4; ++ell)
        for (long s = 0; s <= 3; ++s) {
            ReplayReport r1 = replay_telescoping_proof(Theorem::One, {ell, s, s + 8});
            ReplayReport r2 = replay_telescoping_proof(Theorem::Two, {ell, s, s + 8});
            if (ell == 1 && s >= 2) {
                CHECK_FALSE(r1.applicable);
                CHECK_FALSE(r2.applicable);
            } else {
                CHECK(r1.all_checks());
                CHECK(r2.all_checks());
            }
        }
}

TEST_CASE("s = 0 reduction reproduces the pure-power forms") {
    IdentityReport a = check_s0_reduction(Theorem::One, 2, 1);
    CHECK(a.equal);
    CHECK(a.lhs == Rational(-27, 8));
    IdentityReport b = check_s0_reduction(Theorem::Two, 2, 1);
    CHECK(b.equal);
    CHECK(b.lhs == Rational(81, 16));
    CHECK(check_s0_reduction(Theorem::One, 1, 0).equal);
    for (long ell = 1; ell <= 5; ++ell)
        for (long M = 0; M <= 12; ++M) {
            CHECK(check_s0_reduction(Theorem::One, ell, M).equal);
            CHECK(check_s0_reduction(Theorem::Two, ell, M).equal);
        }
}
