#include "wzsum/mpoly.hpp"

#include <sstream>

namespace wzsum {

namespace {
constexpr const char* kVarNames[kVarCount] = {"L", "n", "k", "s"};
}

const Rational& EvalPoint::get(Var v) const {
    const auto& slot = values_[static_cast<int>(v)];
    if (!slot.has_value())
        throw MissingAssignmentError(std::string("EvalPoint: no value for variable ")
                                     + kVarNames[static_cast<int>(v)]);
    return *slot;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int MPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    const Exponents& e = terms_.rbegin()->first;
    return e[0] + e[1] + e[2] + e[3];
}

const Rational& MPoly::leading_coefficient() const {
    if (terms_.empty())
        throw InvalidParameterError("MPoly: zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (this == &o) {
        // a += a doubles every coefficient; no term can cancel to zero.
        for (auto& [e, c] : terms_)
            c += c;
        return *this;
    }
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    MPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly out(*this);
    for (auto& [e, coeff] : out.terms_)
        coeff = -coeff;
    return out;
}

Rational MPoly::eval(const EvalPoint& pt) const {
    Rational out(0);
    for (const auto& [e, coeff] : terms_) {
        Rational term = coeff;
        for (int v = 0; v < kVarCount; ++v) {
            if (e[v] == 0)
                continue;
            term *= pow(pt.get(static_cast<Var>(v)), e[v]);
        }
        out += term;
    }
    return out;
}

std::string MPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Descending grlex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, coeff] = *it;
        Rational c = coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        first = false;

        bool is_const = (e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0);
        bool coeff_shown = is_const || c != Rational(1);
        if (coeff_shown)
            os << c.to_string();
        bool need_star = coeff_shown;
        for (int v = 0; v < kVarCount; ++v) {
            if (e[v] == 0)
                continue;
            if (need_star)
                os << "*";
            os << kVarNames[v];
            if (e[v] > 1)
                os << "^" << e[v];
            need_star = true;
        }
    }
    return os.str();
}

RationalFunction::RationalFunction(MPoly num, MPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw InvalidParameterError("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    const Rational& lead = den_.leading_coefficient();
    if (lead != Rational(1)) {
        Rational inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& c) {
    num_ *= c;
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<Rational> RationalFunction::try_eval(const EvalPoint& pt) const {
    Rational d = den_.eval(pt);
    if (d.is_zero())
        return std::nullopt;
    return num_.eval(pt) / d;
}

std::string RationalFunction::to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace wzsum
