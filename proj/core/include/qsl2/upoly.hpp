#pragma once

#include <map>
#include <string>

#include "qsl2/rational_function.hpp"

namespace qsl2 {

/// Laurent polynomial in u = q^{-p} with coefficients in Q(q).
///
/// Weight-module computations keep p symbolic through these; negative or odd
/// u-powers are allowed transiently, but assembled quantities must satisfy
/// is_bounded() (all u-exponents even and >= 0, i.e. the value lies in
/// Q(q)[t] with t = u^2), and "asymptotically zero" additionally means the
/// u^0 coefficient vanishes.
class UPoly {
public:
    using TermMap = std::map<int, RationalFunction>;  // exponent of u -> coefficient

    UPoly() = default;  // zero
    explicit UPoly(const RationalFunction& c) { add_term(0, c); }
    explicit UPoly(long long c) { add_term(0, RationalFunction(c)); }

    static UPoly monomial(const RationalFunction& c, int uexp);
    static UPoly u_power(int uexp) { return monomial(RationalFunction::one(), uexp); }
    static UPoly one() { return UPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant_in_u() const;

    bool is_bounded() const;
    bool is_asympt_zero() const;

    const TermMap& terms() const { return terms_; }
    RationalFunction coeff_u(int uexp) const;

    void add_term(int uexp, const RationalFunction& c);

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly operator-() const;
    UPoly& mul_scalar(const RationalFunction& c);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);

    bool operator==(const UPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    /// The u^0 coefficient, i.e. the limit u -> 0. Throws Unbounded if a
    /// negative or odd u-exponent is present.
    RationalFunction eval_u0() const;

    /// Substitute u = q^{-p} for a concrete p.
    RationalFunction eval_u_qpow(int p) const;

    std::string str() const;  // e.g. "1 - q^-2*u^2"

private:
    TermMap terms_;
};

/// (a; q^{-2})_m = prod_{s=0}^{m-1} (1 - a q^{-2s}) for a single monomial a.
/// Pre: a is a monomial c*q^e*u^f (throws Error otherwise), m >= 0.
UPoly pochhammer_q2(const UPoly& a, int m);

}  // namespace qsl2
