#include "qsl2/rational_function.hpp"

namespace qsl2 {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Move the denominator's q-power into the numerator.
    int shift = den_.min_exp();
    if (shift != 0) {
        den_.mul_q_power(-shift);
        num_.mul_q_power(-shift);
    }
    if (den_.is_monomial()) {  // constant now
        num_.mul_scalar(Rational(1) / den_.terms().begin()->second);
        den_ = LaurentPoly::one();
        return;
    }
    if (!num_.is_monomial()) {
        LaurentPoly g = lp_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = lp_div_exact(num_, g);
            den_ = lp_div_exact(den_, g);
        }
        if (den_.is_monomial()) {
            num_.mul_q_power(-den_.min_exp());
            num_.mul_scalar(Rational(1) / den_.terms().begin()->second);
            den_ = LaurentPoly::one();
            return;
        }
    }
    // Scale so den has integer coefficients, content 1, positive leading coeff.
    Integer den_lcm = 1;
    for (const auto& [e, c] : den_.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    Integer g = 0;
    for (const auto& [e, c] : den_.terms()) {
        Rational scaled = c * den_lcm;
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(scaled));
        if (g == 1) break;
    }
    Rational scale(den_lcm, g);
    if (den_.leading_coeff() < 0) scale = -scale;
    if (scale != 1) {
        den_.mul_scalar(scale);
        num_.mul_scalar(scale);
    }
}

const LaurentPoly& RationalFunction::as_laurent() const {
    if (!den_.is_one()) throw Error("rational function is not a Laurent polynomial: " + str());
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    RationalFunction out;
    out.num_ = den_;
    out.den_ = num_;
    out.normalize();
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        LaurentPoly g = lp_gcd(den_, o.den_);
        if (g.is_one()) {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        } else {
            LaurentPoly dr = lp_div_exact(o.den_, g);
            num_ = num_ * dr + o.num_ * lp_div_exact(den_, g);
            den_ *= dr;
        }
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly::one();
        return *this;
    }
    // Cross-cancel before multiplying to keep the gcd inputs small.
    LaurentPoly on = o.num_;
    LaurentPoly od = o.den_;
    LaurentPoly g1 = lp_gcd(num_, od);
    if (!g1.is_one()) {
        num_ = lp_div_exact(num_, g1);
        od = lp_div_exact(od, g1);
    }
    LaurentPoly g2 = lp_gcd(on, den_);
    if (!g2.is_one()) {
        on = lp_div_exact(on, g2);
        den_ = lp_div_exact(den_, g2);
    }
    num_ *= on;
    den_ *= od;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    return *this *= o.reciprocal();
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

}  // namespace qsl2
