#pragma once

#include <string>
#include <vector>

#include "qsl2/rational_function.hpp"

namespace qsl2 {

/// Exact truncation of an element of Q((q^{-1})): coeffs[k - lowest] is the
/// coefficient of q^{-k} for k = lowest..order. Leading zeros are trimmed
/// (lowest points at the first nonzero coefficient); the zero series has an
/// empty coefficient list.
struct QSeries {
    int lowest = 0;
    int order = -1;
    std::vector<Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Rational coeff_qminus(int k) const;

    /// True when every stored coefficient is a nonnegative integer.
    bool all_nonneg_integers() const;

    std::string str() const;  // e.g. "1 + 3*q^-2 + 5*q^-4"
};

/// Expands r in ascending powers of q^{-1}, exactly through q^{-order}.
/// Throws NotExpandable when no such expansion exists.
QSeries series_expand(const RationalFunction& r, int order);

/// Default truncation order used by positivity checks.
inline constexpr int kDefaultSeriesOrder = 30;

}  // namespace qsl2
