#pragma once

#include <string>

#include "qsl2/laurent.hpp"

namespace qsl2 {

/// Element of the field Q(q), stored as a reduced quotient of Laurent
/// polynomials in canonical form:
///   - gcd(num, den) = 1 after clearing q-powers,
///   - den has integer coefficients with content 1, lowest q-exponent 0,
///     and positive leading coefficient.
/// Equal values therefore have identical representations.
class RationalFunction {
public:
    RationalFunction() : den_(LaurentPoly::one()) {}  // zero
    RationalFunction(const LaurentPoly& num) : num_(num), den_(LaurentPoly::one()) {
        normalize();
    }
    RationalFunction(LaurentPoly num, LaurentPoly den);
    explicit RationalFunction(long long c)
        : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
    explicit RationalFunction(const Rational& c)
        : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}

    static RationalFunction q_power(int e) {
        RationalFunction r;
        r.num_ = LaurentPoly::q_power(e);
        return r;
    }
    static RationalFunction one() { return RationalFunction(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    /// Returns the numerator when den == 1; throws Error otherwise.
    const LaurentPoly& as_laurent() const;

    RationalFunction operator-() const;
    RationalFunction reciprocal() const;  // throws DivisionByZero on zero

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
        return a -= b;
    }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
        return a *= b;
    }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
        return a /= b;
    }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// "num" or "(num)/(den)", each in ascending q-powers.
    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace qsl2
