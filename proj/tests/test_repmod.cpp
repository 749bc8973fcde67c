#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qsl2/bases.hpp"
#include "qsl2/tensor_module.hpp"

using namespace qsl2;

namespace {

LaurentPoly q(int e) { return LaurentPoly::q_power(e); }

const RationalFunction kQmQ(q(1) - q(-1));  // q - q^{-1}

// q^e/(q - q^{-1}) as a u-constant.
UPoly over_qmq(int e) { return UPoly(RationalFunction(q(e)) / kQmQ); }

std::mt19937 rng(777);

}  // namespace

TEST_CASE("weight parameter validation") {
    CHECK_THROWS_AS(WeightParam::concrete(2, -3), Error);
    CHECK_THROWS_AS(WeightParam::concrete(-1, 5), Error);
    CHECK(WeightParam::concrete(3, -3).p == 3);
    CHECK(WeightParam::symbolic(-7).is_symbolic());
}

TEST_CASE("generator actions on the vacuum") {
    const WeightParam sym = WeightParam::symbolic(0);
    const TensorVector vac = TensorVector::vacuum(sym);

    for (int m = -3; m <= 3; ++m) {
        const TensorVector v0 = TensorVector::vacuum(WeightParam::symbolic(m));
        TensorVector kv = act_gen(GenK::K, v0);
        CHECK(kv.coeff(0, 0) == UPoly(RationalFunction::q_power(m)));
        CHECK(act_gen(GenK::Kinv, kv) == v0);
    }

    // F(xi (x) eta) = xi (x) F eta: the lowest-weight vector kills the first term.
    CHECK(act_gen(GenK::F, vac) == TensorVector::pure_tensor(sym, 0, 1));

    // E F (xi (x) eta) at m=0: (1,1) + q^{-1}(1-u^2)/(1-q^{-2}) (0,0).
    TensorVector efv = act_gen(GenK::E, act_gen(GenK::F, vac));
    CHECK(efv.coeff(1, 1).is_one());
    UPoly expected = over_qmq(0);
    expected -= UPoly::monomial(RationalFunction(q(0)) / kQmQ, 2);
    CHECK(efv.coeff(0, 0) == expected);
    CHECK(efv.coeff(0, 0).eval_u0() == RationalFunction(q(-1), poch_q2m(1)));
}

TEST_CASE("divided-power actions") {
    const WeightParam sym = WeightParam::symbolic(2);
    const TensorVector vac = TensorVector::vacuum(sym);
    CHECK(act_divpow(Gen::E, 0, vac) == vac);
    for (int a = 1; a <= 4; ++a)
        CHECK(act_divpow(Gen::E, a, vac) == TensorVector::pure_tensor(sym, a, 0));
    for (int b = 1; b <= 4; ++b)
        CHECK(act_divpow(Gen::F, b, vac) == TensorVector::pure_tensor(sym, 0, b));
}

TEST_CASE("closed action sums") {
    const WeightParam sym = WeightParam::symbolic(0);
    const TensorVector vac = TensorVector::vacuum(sym);

    TensorVector ef0 = closed_action_EF(0, 3, vac);
    CHECK(ef0 == TensorVector::pure_tensor(sym, 0, 3));
    TensorVector fe0 = closed_action_FE(3, 0, vac);
    CHECK(fe0 == TensorVector::pure_tensor(sym, 3, 0));

    TensorVector ef = closed_action_EF(1, 1, vac);
    CHECK(ef.coeff(1, 1).is_one());
    UPoly expected = over_qmq(0);
    expected -= UPoly::monomial(RationalFunction(q(0)) / kQmQ, 2);
    CHECK(ef.coeff(0, 0) == expected);

    // FE at a=b=1, m=0: s=1 factor is (1 - q^0 u^2)/(1 - q^{-2}).
    TensorVector fe = closed_action_FE(1, 1, vac);
    CHECK(fe.coeff(0, 0) == expected);

    CHECK_THROWS_AS(closed_action_EF(1, 1, ef), Error);  // not a vacuum

    SUBCASE("equal to iterated actions, symbolic") {
        for (int m = -3; m <= 3; ++m) {
            const TensorVector v0 = TensorVector::vacuum(WeightParam::symbolic(m));
            for (int a = 0; a <= 3; ++a)
                for (int b = 0; b <= 3; ++b) {
                    CHECK(closed_action_EF(a, b, v0) ==
                          act_divpow(Gen::E, a, act_divpow(Gen::F, b, v0)));
                    CHECK(closed_action_FE(a, b, v0) ==
                          act_divpow(Gen::F, b, act_divpow(Gen::E, a, v0)));
                }
        }
    }
}

TEST_CASE("single-step approximation identities") {
    // The E-step: E(x' xi (x) y eta) decomposes into the raised pure tensor,
    // the ir-term with constant q^{b-1}, and a u^2-damped r_i-term with the
    // same constant. Exact as UPoly identities, label by label.
    for (int m = -4; m <= 4; ++m) {
        const WeightParam sym = WeightParam::symbolic(m);
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                const TensorVector e_ab = TensorVector::pure_tensor(sym, a, b);
                TensorVector lhs = act_gen(GenK::E, e_ab);
                TensorVector rhs(sym);
                rhs.add_term(a + 1, b, UPoly(RationalFunction(q_integer(a + 1))));
                if (b >= 1) {
                    UPoly ir_term = over_qmq(m + 2 * a - 2 * b + 2);
                    ir_term.mul_scalar(RationalFunction(r_map_scale(b)));
                    UPoly ri_term = UPoly::monomial(RationalFunction(q(2 * a - m)) / kQmQ, 2);
                    ri_term.mul_scalar(RationalFunction(r_map_scale(b)));
                    rhs.add_term(a, b - 1, ir_term - ri_term);
                }
                CHECK(lhs == rhs);

                // The F-step mirror.
                TensorVector lhs_f = act_gen(GenK::F, e_ab);
                TensorVector rhs_f(sym);
                rhs_f.add_term(a, b + 1, UPoly(RationalFunction(q_integer(b + 1))));
                if (a >= 1) {
                    UPoly ir_term = over_qmq(-(m + 2 * a - 2 * b) + 2);
                    ir_term.mul_scalar(RationalFunction(r_map_scale(a)));
                    UPoly ri_term = UPoly::monomial(RationalFunction(q(2 * b - m)) / kQmQ, 2);
                    ri_term.mul_scalar(RationalFunction(r_map_scale(a)));
                    rhs_f.add_term(a - 1, b, ir_term - ri_term);
                }
                CHECK(lhs_f == rhs_f);
            }
    }
}

TEST_CASE("apply_udot") {
    for (int m : {-2, 0, 3}) {
        const TensorVector vac = TensorVector::vacuum(WeightParam::symbolic(m));
        CHECK(apply_udot(UdotElement::idempotent(m), vac) == vac);
    }
    const TensorVector vac0 = TensorVector::vacuum(WeightParam::symbolic(0));
    CHECK(apply_udot(UdotElement::basis(1, 1, 0), vac0) == closed_action_EF(1, 1, vac0));
    CHECK_THROWS_AS(apply_udot(UdotElement::idempotent(1), vac0), WeightMismatch);
}

TEST_CASE("gram values") {
    const WeightParam sym = WeightParam::symbolic(0);
    const TensorVector vac = TensorVector::vacuum(sym);
    CHECK(gram(vac, vac).is_one());

    // (F eta_n, F eta_n) = (1-q^{-2n})/(1-q^{-2}) on L(n), here n = p + m.
    for (int p : {3, 5, 9})
        for (int m : {-1, 0, 2}) {
            const int n = p + m;
            UPoly g = gram_highest_factor(1, WeightParam::concrete(p, m));
            CHECK(g.coeff_u(0) == RationalFunction(q(0) - q(-2 * n), poch_q2m(1)));
        }

    // Symbolic norms of pure tensors limit to 1/((q^{-2};q^{-2})_a (q^{-2};q^{-2})_b).
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            const TensorVector t = TensorVector::pure_tensor(sym, a, b);
            UPoly g = gram(t, t);
            CHECK(g.is_bounded());
            CHECK(g.eval_u0() == RationalFunction(LaurentPoly::one(), poch_q2m(a) * poch_q2m(b)));
        }

    CHECK_THROWS_AS(gram(vac, TensorVector::vacuum(WeightParam::symbolic(1))), WeightMismatch);
}

TEST_CASE("boundedness is stable under short words") {
    std::uniform_int_distribution<int> coin(0, 1), wdist(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = wdist(rng);
        TensorVector v = TensorVector::vacuum(WeightParam::symbolic(m));
        for (int step = 0; step < 4; ++step) {
            v = act_gen(coin(rng) ? GenK::E : GenK::F, v);
            CHECK(v.all_bounded());
        }
    }
    // apply_udot keeps vectors bounded too.
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int m : {-2, 0, 1}) {
                const TensorVector vac = TensorVector::vacuum(WeightParam::symbolic(m));
                CHECK(apply_udot(UdotElement::basis(a, b, m), vac).all_bounded());
            }
}

TEST_CASE("concrete mode matches the u = q^{-p} substitution") {
    std::uniform_int_distribution<int> coin(0, 1);
    for (int m : {-2, 0, 3}) {
        std::vector<GenK> word;
        for (int step = 0; step < 4; ++step) word.push_back(coin(rng) ? GenK::E : GenK::F);
        TensorVector sym_v = TensorVector::vacuum(WeightParam::symbolic(m));
        for (GenK g : word) sym_v = act_gen(g, sym_v);
        for (int p : {10, 12}) {  // big enough that no label truncates
            const WeightParam conc = WeightParam::concrete(p, m);
            TensorVector conc_v = TensorVector::vacuum(conc);
            for (GenK g : word) conc_v = act_gen(g, conc_v);
            TensorVector substituted(conc);
            for (const auto& [ab, c] : sym_v.terms())
                substituted.add_term(ab.first, ab.second, c);
            CHECK(substituted == conc_v);
        }
    }
}

TEST_CASE("concrete truncation at the module tops") {
    // In wL(2) (x) L(2), E^(3) kills everything in the left slot.
    const WeightParam wp = WeightParam::concrete(2, 0);
    TensorVector v = act_divpow(Gen::E, 3, TensorVector::vacuum(wp));
    CHECK(v.is_zero());
    // F^(b) dies past b = p + m.
    TensorVector w = act_divpow(Gen::F, 3, TensorVector::vacuum(WeightParam::concrete(4, -2)));
    CHECK(w.is_zero());
}

TEST_CASE("limit extraction") {
    const WeightParam sym = WeightParam::symbolic(0);
    const TensorVector vac = TensorVector::vacuum(sym);

    TensorVector az(sym);
    az.add_term(1, 1, UPoly::monomial(RationalFunction(q(3)), 2));
    CHECK(limit_vector(az).empty());

    auto lm = limit_vector(closed_action_EF(1, 1, vac));
    CHECK(lm.size() == 2);
    CHECK(lm.at({1, 1}).is_one());
    CHECK(lm.at({0, 0}) == RationalFunction(q(-1), poch_q2m(1)));

    TensorVector bad(sym);
    bad.add_term(0, 0, UPoly::u_power(1));
    CHECK_THROWS_AS(limit_vector(bad), Unbounded);
    CHECK_THROWS_AS(limit_vector(TensorVector::vacuum(WeightParam::concrete(3, 0))), Error);
}

TEST_CASE("unfuse") {
    for (int a = 0; a <= 4; ++a)
        for (int m : {-3, 0, 2}) {
            auto terms = unfuse(UdotElement::basis(a, 0, m));
            REQUIRE(terms.size() == 1);
            CHECK(terms[0].a == a);
            CHECK(terms[0].b == 0);
            CHECK(terms[0].coeff.is_one());
        }

    auto ef = unfuse(UdotElement::basis(1, 1, 0));
    REQUIRE(ef.size() == 2);
    CHECK(ef[0].a == 0);
    CHECK(ef[0].coeff == RationalFunction(q(-1), poch_q2m(1)));
    CHECK(ef[1].a == 1);
    CHECK(ef[1].coeff.is_one());

    SUBCASE("PBW elements unfuse to single pure tensors") {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for (int m : {-3, -1, 0, 2}) {
                    auto terms = unfuse(pbw_to_cb(PBWIndex{a, b, m}));
                    REQUIRE(terms.size() == 1);
                    CHECK(terms[0].a == a);
                    CHECK(terms[0].b == b);
                    CHECK(terms[0].coeff.is_one());
                }
    }
}

TEST_CASE("gram limits reproduce the bilinear pairing") {
    for (int m = -2; m <= 2; ++m) {
        const TensorVector vac = TensorVector::vacuum(WeightParam::symbolic(m));
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int a2 = 0; a2 <= 2; ++a2)
                    for (int b2 = 0; b2 <= 2; ++b2) {
                        const UdotElement x = UdotElement::basis(a, b, m);
                        const UdotElement y = UdotElement::basis(a2, b2, m);
                        UPoly g = gram(apply_udot(x, vac), apply_udot(y, vac));
                        CHECK(g.eval_u0() == pairing(x, y));
                    }
    }
}
