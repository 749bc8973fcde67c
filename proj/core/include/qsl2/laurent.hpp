#pragma once

#include <map>
#include <string>

#include "qsl2/rational.hpp"

namespace qsl2 {

/// Sparse Laurent polynomial in q with exact rational coefficients.
///
/// Invariant: no stored coefficient is zero. All arithmetic is exact.
class LaurentPoly {
public:
    using TermMap = std::map<int, Rational>;  // exponent of q -> coefficient

    LaurentPoly() = default;  // zero
    explicit LaurentPoly(const Rational& c) { add_term(0, c); }
    explicit LaurentPoly(long long c) { add_term(0, Rational(c)); }

    static LaurentPoly monomial(const Rational& c, int exp);
    static LaurentPoly q_power(int exp) { return monomial(Rational(1), exp); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;  // zero counts as constant
    bool is_monomial() const { return terms_.size() == 1; }

    /// Lowest/highest stored exponent. Pre: !is_zero().
    int min_exp() const;
    int max_exp() const;

    const TermMap& terms() const { return terms_; }
    Rational coeff(int exp) const;
    /// Coefficient of the highest exponent. Pre: !is_zero().
    const Rational& leading_coeff() const;

    /// Adds c*q^exp, erasing the term if it cancels.
    void add_term(int exp, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly& mul_scalar(const Rational& c);
    LaurentPoly& mul_q_power(int exp);  // shift all exponents by exp
    LaurentPoly pow(unsigned n) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Ascending q-powers, e.g. "q^-2 + 2 + 3/2*q".
    std::string str() const;

private:
    TermMap terms_;
};

/// Monic-free gcd in canonical divisor form: integer coefficients with
/// content 1, lowest exponent 0, positive leading coefficient.
/// lp_gcd(0, 0) = 0; gcd with a monomial is 1.
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division; throws Error if b is zero or does not divide a.
LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qsl2
