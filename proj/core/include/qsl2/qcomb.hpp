#pragma once

#include "qsl2/rational_function.hpp"

namespace qsl2 {

/// Balanced q-integer [n] = (q^n - q^{-n})/(q - q^{-1}); [-n] = -[n].
LaurentPoly q_integer(int n);

/// [n]! = [1][2]...[n]. Pre: n >= 0.
LaurentPoly q_factorial(int n);

/// Balanced Gaussian binomial, prod_{d=1}^{k} [top-d+1]/[d].
/// Defined for any integer top and k >= 0; vanishes for 0 <= top < k.
LaurentPoly gaussian_binomial(int top, int k);

/// (q^{-2}; q^{-2})_m = prod_{s=1}^{m} (1 - q^{-2s}). Pre: m >= 0.
LaurentPoly poch_q2m(int m);

/// 1/(q^{-2}; q^{-2})_m as a rational function.
RationalFunction inv_poch_q2m(int m);

}  // namespace qsl2
