#pragma once

#include <map>
#include <tuple>

#include "qsl2/tensor_module.hpp"
#include "qsl2/udot.hpp"

namespace qsl2 {

/// w_m(a, b) produced by the fusion recursion, in canonical coordinates.
/// The value lies in E^(a)F^(b)1_m plus strictly smaller ladder terms.
struct FusionResult {
    int a = 0;
    int b = 0;
    int m = 0;
    UdotElement value{0};
};

/// Computes the fusion product E^(a) *_m F^(b) by the recursion
///   x *_m y = (1/[a]) ( E (E^(a-1) *_m F^(b))
///                       - q^{(m+2(a-1)-2b)+2}/(q-q^{-1}) * q^{b-1}
///                         (E^(a-1) *_m F^(b-1)) ),
/// base case E^(0) *_m F^(b) = F^(b)1_m; the q^{b-1} comes from
/// ir(F^(b)) = q^{b-1} F^(b-1). Results are memoized per Fuser instance.
class Fuser {
public:
    const UdotElement& fuse(int a, int b, int m);

private:
    std::map<std::tuple<int, int, int>, UdotElement> memo_;
};

/// One-shot convenience wrapper around Fuser.
FusionResult fuse(int a, int b, int m);

/// Symbolic remainder fuse(a,b,m)(xi (x) eta) - E^(a)xi (x) F^(b)eta.
TensorVector defining_limit_remainder(int a, int b, int m);

/// True when the remainder above is asymptotically zero (all coefficients
/// bounded and divisible by u^2).
bool verify_defining_limit(int a, int b, int m);

/// Third pairing route: Gram value of the two module vectors in symbolic
/// mode, evaluated at u -> 0. Throws WeightMismatch on unequal weights;
/// Unbounded must never fire.
RationalFunction pairing_module_limit(const UdotElement& x, const UdotElement& y);

}  // namespace qsl2
