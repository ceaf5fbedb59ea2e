#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "wzsum/rational.hpp"

namespace wzsum {

/// The four polynomial variables, in term-order significance L > n > k > s.
enum class Var : int { L = 0, N = 1, K = 2, S = 3 };

inline constexpr int kVarCount = 4;

/// Exponent vector (eL, en, ek, es), all nonnegative.
using Exponents = std::array<int, kVarCount>;

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically with L most significant.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db)
            return da < db;
        return a < b;
    }
};

/// Assignment of rational values to a subset of the variables.
class EvalPoint {
public:
    EvalPoint& set(Var v, Rational value) {
        values_[static_cast<int>(v)] = std::move(value);
        return *this;
    }

    bool has(Var v) const { return values_[static_cast<int>(v)].has_value(); }

    const Rational& get(Var v) const;

    static EvalPoint all(Rational l, Rational n, Rational k, Rational s) {
        EvalPoint pt;
        pt.set(Var::L, std::move(l)).set(Var::N, std::move(n));
        pt.set(Var::K, std::move(k)).set(Var::S, std::move(s));
        return pt;
    }

private:
    std::array<std::optional<Rational>, kVarCount> values_;
};

/// Sparse multivariate polynomial over the rationals in L, n, k, s.
/// No stored coefficient is zero; the zero polynomial is the empty map.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    MPoly() = default;
    explicit MPoly(const Rational& c) { add_term({0, 0, 0, 0}, c); }

    static MPoly constant(const Rational& c) { return MPoly(c); }

    static MPoly variable(Var v) {
        MPoly out;
        Exponents e{0, 0, 0, 0};
        e[static_cast<int>(v)] = 1;
        out.add_term(e, Rational(1));
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Max total degree over terms; -1 for the zero polynomial.
    int total_degree() const;

    /// Coefficient of the grlex-largest term; requires a nonzero polynomial.
    const Rational& leading_coefficient() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rational& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

    MPoly operator-() const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Exact evaluation. Every variable that occurs with positive exponent
    /// must be assigned; otherwise MissingAssignmentError.
    Rational eval(const EvalPoint& pt) const;

    /// Canonical rendering: terms in descending grlex order, e.g. "2*L*n - s^2 + 1".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);

    TermMap terms_;
};

/// Quotient of two polynomials. The denominator is nonzero and is kept
/// normalized with leading coefficient 1 under grlex order; no gcd
/// reduction is performed.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RationalFunction(MPoly num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(MPoly num, MPoly den);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator*=(const Rational& c);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
    friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a *= c; }

    RationalFunction operator-() const;

    /// True iff num_a * den_b == num_b * den_a as polynomials (exact identity).
    bool equals(const RationalFunction& o) const;

    /// Evaluates num/den at pt; nullopt when the denominator evaluates to zero.
    std::optional<Rational> try_eval(const EvalPoint& pt) const;

    std::string to_string() const;

private:
    void normalize();

    MPoly num_;
    MPoly den_;
};

} // namespace wzsum
