#include "qsl2/qseries.hpp"

#include <sstream>

namespace qsl2 {

Rational QSeries::coeff_qminus(int k) const {
    if (k < lowest || k > order) return Rational(0);
    return coeffs[static_cast<size_t>(k - lowest)];
}

bool QSeries::all_nonneg_integers() const {
    for (const auto& c : coeffs)
        if (c < 0 || boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

std::string QSeries::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (c == 0) continue;
        int k = lowest + static_cast<int>(i);
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (abs == 1);
        if (!unit || k == 0) os << rational_to_string(abs);
        if (k != 0) {
            if (!unit) os << "*";
            os << "q^" << -k;
        }
    }
    if (first) return "0";
    os << " + O(q^" << -(order + 1) << ")";
    return os.str();
}

QSeries series_expand(const RationalFunction& r, int order) {
    QSeries out;
    out.order = order;
    if (r.is_zero()) {
        out.lowest = order + 1;
        return out;
    }
    if (r.den().is_zero()) throw NotExpandable("denominator is zero");

    // Work in x = q^{-1}: the q-term c*q^e is c*x^{-e}. After factoring the
    // leading q-power out of each part, both become ordinary power series
    // with invertible constant term, so plain long division applies.
    const LaurentPoly& num = r.num();
    const LaurentPoly& den = r.den();
    const int k0 = den.max_exp() - num.max_exp();  // lowest x-exponent of r
    if (k0 > order) {
        out.lowest = order + 1;
        return out;
    }
    const size_t len = static_cast<size_t>(order - k0) + 1;

    auto densify = [](const LaurentPoly& p, size_t n) {
        std::vector<Rational> v(n, Rational(0));
        const int top = p.max_exp();
        for (const auto& [e, c] : p.terms()) {
            size_t i = static_cast<size_t>(top - e);  // x-exponent relative to the start
            if (i < n) v[i] = c;
        }
        return v;
    };
    std::vector<Rational> n_vec = densify(num, len);
    std::vector<Rational> d_vec = densify(den, len);

    std::vector<Rational> quot(len, Rational(0));
    for (size_t i = 0; i < len; ++i) {
        Rational acc = n_vec[i];
        for (size_t j = 1; j <= i; ++j) {
            if (d_vec[j] == 0 || quot[i - j] == 0) continue;
            acc -= d_vec[j] * quot[i - j];
        }
        quot[i] = acc / d_vec[0];
    }

    size_t first = 0;
    while (first < len && quot[first] == 0) ++first;
    if (first == len) {
        out.lowest = order + 1;
        return out;
    }
    out.lowest = k0 + static_cast<int>(first);
    out.coeffs.assign(quot.begin() + static_cast<long>(first), quot.end());
    return out;
}

}  // namespace qsl2
