#include "qsl2/fusion.hpp"

#include <cassert>

namespace qsl2 {

const UdotElement& Fuser::fuse(int a, int b, int m) {
    assert(a >= 0 && b >= 0);
    const auto key = std::tuple(a, b, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    UdotElement value(m);
    if (a == 0) {
        value = UdotElement::basis(0, b, m);
    } else {
        value = mul_gen(Gen::E, fuse(a - 1, b, m));
        if (b >= 1) {
            // <i, m + |E^(a-1)| + |F^(b)|> + 2 = m + 2(a-1) - 2b + 2, and
            // ir(F^(b)) contributes r_map_scale(b) = q^{b-1}.
            LaurentPoly num = LaurentPoly::q_power(m + 2 * a - 2 * b) * r_map_scale(b);
            LaurentPoly qmq = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
            RationalFunction c(num, qmq);
            UdotElement lower = fuse(a - 1, b - 1, m);
            lower.mul_scalar(c);
            value -= lower;
        }
        value.mul_scalar(RationalFunction(LaurentPoly::one(), q_integer(a)));
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

FusionResult fuse(int a, int b, int m) {
    Fuser fuser;
    return FusionResult{a, b, m, fuser.fuse(a, b, m)};
}

TensorVector defining_limit_remainder(int a, int b, int m) {
    Fuser fuser;
    const WeightParam wp = WeightParam::symbolic(m);
    TensorVector v = apply_udot(fuser.fuse(a, b, m), TensorVector::vacuum(wp));
    v -= TensorVector::pure_tensor(wp, a, b);
    return v;
}

bool verify_defining_limit(int a, int b, int m) {
    return defining_limit_remainder(a, b, m).all_asympt_zero();
}

RationalFunction pairing_module_limit(const UdotElement& x, const UdotElement& y) {
    if (x.weight() != y.weight())
        throw WeightMismatch("pairing_module_limit needs equal weights, got 1_" +
                             std::to_string(x.weight()) + " and 1_" + std::to_string(y.weight()));
    const TensorVector v0 = TensorVector::vacuum(WeightParam::symbolic(x.weight()));
    UPoly g = gram(apply_udot(x, v0), apply_udot(y, v0));
    return g.eval_u0();
}

}  // namespace qsl2
