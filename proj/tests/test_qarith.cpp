#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qsl2/qcomb.hpp"
#include "qsl2/qseries.hpp"
#include "qsl2/upoly.hpp"

using namespace qsl2;

namespace {

LaurentPoly q(int e) { return LaurentPoly::q_power(e); }

std::mt19937 rng(20240817);

LaurentPoly random_laurent() {
    std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), num(-9, 9), den(1, 4);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp(rng), Rational(num(rng), den(rng)));
    return p;
}

RationalFunction random_ratfun() {
    LaurentPoly den = random_laurent();
    while (den.is_zero()) den = random_laurent();
    return RationalFunction(random_laurent(), den);
}

// Independent q-binomial oracle: the balanced Pascal recurrence
// qbinom(n, k) = q^{-k} qbinom(n-1, k) + q^{n-k} qbinom(n-1, k-1).
LaurentPoly qbinom_oracle(int n, int k) {
    if (k == 0) return LaurentPoly::one();
    if (n <= 0) return LaurentPoly();
    LaurentPoly left = qbinom_oracle(n - 1, k);
    left.mul_q_power(-k);
    LaurentPoly right = qbinom_oracle(n - 1, k - 1);
    right.mul_q_power(n - k);
    return left + right;
}

}  // namespace

TEST_CASE("laurent polynomial basics") {
    LaurentPoly p;
    CHECK(p.is_zero());
    p.add_term(2, Rational(1));
    p.add_term(-1, Rational(3, 2));
    CHECK(p.str() == "3/2*q^-1 + q^2");
    p.add_term(2, Rational(-1));
    CHECK(p.terms().size() == 1);

    CHECK((q(1) * q(-1)).is_one());
    CHECK((q(3) + q(-3)) * (q(3) - q(-3)) == q(6) - q(-6));
    CHECK(q(2).pow(3) == q(6));
}

TEST_CASE("laurent ring axioms on random triples") {
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_laurent(), b = random_laurent(), c = random_laurent();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("laurent gcd and exact division") {
    LaurentPoly f = (q(0) - q(-2)) * (q(0) - q(-4));  // (1-q^-2)(1-q^-4)
    LaurentPoly g = (q(0) - q(-2)) * (q(0) + q(0));
    LaurentPoly d = lp_gcd(f, g);
    // Canonical divisor form: shifted to exponent 0, integer, positive lead.
    CHECK(lp_div_exact(f, d) * d == f);
    CHECK(lp_div_exact(g, d) * d == g);
    CHECK(!d.is_one());
    CHECK(lp_gcd(q(5), f).is_one());
    CHECK_THROWS_AS(lp_div_exact(f, LaurentPoly()), DivisionByZero);
}

TEST_CASE("rational function canonical form") {
    // Equal values must have identical representations.
    RationalFunction r1(q(-1) * (q(0) - q(-2)), (q(0) - q(-2)) * (q(0) - q(-2)));
    RationalFunction r2(q(-1), q(0) - q(-2));
    CHECK(r1 == r2);
    CHECK(r1.den().min_exp() == 0);
    CHECK(r1.den().leading_coeff() > 0);
    for (const auto& [e, c] : r1.den().terms())
        CHECK(boost::multiprecision::denominator(c) == 1);

    RationalFunction scaled(LaurentPoly(Rational(3, 4)) * q(2), LaurentPoly(Rational(3, 2)));
    CHECK(scaled == RationalFunction(LaurentPoly(Rational(1, 2)) * q(2)));

    CHECK_THROWS_AS(RationalFunction(q(0), LaurentPoly()), DivisionByZero);
    CHECK_THROWS_AS(RationalFunction().reciprocal(), DivisionByZero);
    CHECK_THROWS_AS(r2.as_laurent(), Error);
}

TEST_CASE("rational function field axioms on random triples") {
    for (int i = 0; i < 60; ++i) {
        RationalFunction a = random_ratfun(), b = random_ratfun(), c = random_ratfun();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * a.reciprocal()).is_one());
        if (!c.is_zero()) CHECK(a / c * c == a);
    }
}

TEST_CASE("q-integers and q-factorials") {
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(2) == q(1) + q(-1));
    CHECK(q_integer(3) == q(2) + q(0) + q(-2));
    for (int n = 0; n <= 9; ++n) CHECK(q_integer(-n) == -q_integer(n));

    CHECK(q_factorial(0).is_one());
    CHECK(q_factorial(2) == q(1) + q(-1));
    CHECK(q_factorial(3) == (q(1) + q(-1)) * (q(2) + q(0) + q(-2)));
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(2, 1) == q(1) + q(-1));
    CHECK(gaussian_binomial(1, 2).is_zero());
    CHECK(gaussian_binomial(4, 2) == q(4) + q(2) + LaurentPoly(2) + q(-2) + q(-4));

    SUBCASE("recurrence oracle") {
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k) == qbinom_oracle(n, k));
    }
    SUBCASE("symmetry") {
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(gaussian_binomial(n, k) == gaussian_binomial(n, n - k));
    }
    SUBCASE("negative top stays polynomial") {
        CHECK(gaussian_binomial(-1, 2) == LaurentPoly(1));
        CHECK(gaussian_binomial(-2, 1) == -q_integer(2));
        for (int top = -6; top < 0; ++top)
            for (int k = 0; k <= 5; ++k) (void)gaussian_binomial(top, k);  // must not throw
    }
}

TEST_CASE("q-binomial identity from the transition-matrix inversion") {
    // Tested with m = k; the printed identity mixes the two indices.
    for (int k = 1; k <= 20; ++k) {
        LaurentPoly sum;
        for (int s = 0; s <= k; ++s) {
            LaurentPoly term = gaussian_binomial(k, s);
            term.mul_q_power(s * (1 - k));
            if (s % 2 != 0) term = -term;
            sum += term;
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("q-Pochhammer on monomials") {
    UPoly a(RationalFunction::q_power(-2));
    CHECK(pochhammer_q2(a, 0).is_one());
    UPoly p1 = pochhammer_q2(a, 1);
    CHECK(p1.coeff_u(0) == RationalFunction(q(0) - q(-2)));
    UPoly p2 = pochhammer_q2(a, 2);
    CHECK(p2.coeff_u(0) == RationalFunction((q(0) - q(-2)) * (q(0) - q(-4))));
    CHECK(poch_q2m(2) == (q(0) - q(-2)) * (q(0) - q(-4)));

    // u-dependent argument: (q^{-2}u^2; q^{-2})_2 keeps u-degree 4.
    UPoly b = UPoly::monomial(RationalFunction::q_power(-2), 2);
    UPoly pb = pochhammer_q2(b, 2);
    CHECK(pb.coeff_u(0).is_one());
    CHECK(pb.coeff_u(4) == RationalFunction(q(-6)));
    CHECK_THROWS_AS(pochhammer_q2(UPoly::one() + b, 1), Error);
}

TEST_CASE("series expansion") {
    RationalFunction geo(q(0), q(0) - q(-2));  // 1/(1-q^-2)
    QSeries s = series_expand(geo, 6);
    CHECK(s.lowest == 0);
    CHECK(s.coeff_qminus(0) == 1);
    CHECK(s.coeff_qminus(1) == 0);
    CHECK(s.coeff_qminus(2) == 1);
    CHECK(s.coeff_qminus(6) == 1);

    // q^{m-1}/(1-q^-2) at m=0: q^-1 + q^-3 through order 4.
    QSeries shifted = series_expand(RationalFunction(q(-1), q(0) - q(-2)), 4);
    CHECK(shifted.lowest == 1);
    CHECK(shifted.coeff_qminus(1) == 1);
    CHECK(shifted.coeff_qminus(2) == 0);
    CHECK(shifted.coeff_qminus(3) == 1);

    // Long-division oracle value: (1+q^-2)/(1-q^-2)^2 = 1 + 3q^-2 + 5q^-4 + ...
    RationalFunction r(q(0) + q(-2), (q(0) - q(-2)) * (q(0) - q(-2)));
    QSeries t = series_expand(r, 4);
    CHECK(t.coeff_qminus(0) == 1);
    CHECK(t.coeff_qminus(2) == 3);
    CHECK(t.coeff_qminus(4) == 5);
    CHECK(t.coeff_qminus(1) == 0);

    // Positive powers of q sit at negative k.
    QSeries u = series_expand(RationalFunction(q(3), q(0) - q(-2)), 2);
    CHECK(u.lowest == -3);
    CHECK(u.coeff_qminus(-3) == 1);
    CHECK(u.coeff_qminus(-1) == 1);

    CHECK(series_expand(RationalFunction(), 5).is_zero());
}

TEST_CASE("series expansion multiplies back") {
    const int order = 12;
    for (int i = 0; i < 60; ++i) {
        RationalFunction r = random_ratfun();
        QSeries s = series_expand(r, order);
        LaurentPoly truncation;
        for (int k = s.lowest; k <= s.order; ++k) truncation.add_term(-k, s.coeff_qminus(k));
        QSeries diff = series_expand(r - RationalFunction(truncation), order);
        CHECK(diff.is_zero());
    }
}

TEST_CASE("u-polynomials: boundedness and limits") {
    UPoly x = UPoly::one() - UPoly::u_power(2);  // 1 - u^2
    CHECK(x.is_bounded());
    CHECK(!x.is_asympt_zero());
    CHECK(x.eval_u0().is_one());

    RationalFunction five_over(LaurentPoly(5), q(0) - q(-2));
    CHECK(UPoly(five_over).eval_u0() == five_over);

    UPoly az = UPoly::monomial(RationalFunction(q(2)), 2);
    CHECK(az.is_asympt_zero());
    CHECK(az.eval_u0().is_zero());

    UPoly odd = UPoly::u_power(1);
    CHECK(!odd.is_bounded());
    CHECK_THROWS_AS(odd.eval_u0(), Unbounded);
    CHECK_THROWS_AS(UPoly::u_power(-2).eval_u0(), Unbounded);

    // Substitution u = q^{-p} agrees with expanding first.
    UPoly y = x * x + UPoly::monomial(five_over, 4);
    for (int p : {3, 5, 8}) {
        RationalFunction direct = y.eval_u_qpow(p);
        RationalFunction byhand = (RationalFunction::one() - RationalFunction::q_power(-2 * p)) *
                                      (RationalFunction::one() - RationalFunction::q_power(-2 * p)) +
                                  five_over * RationalFunction::q_power(-4 * p);
        CHECK(direct == byhand);
    }
}
