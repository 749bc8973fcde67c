#include "qsl2/udot.hpp"

#include <cassert>
#include <sstream>

namespace qsl2 {

std::string CBIndex::str() const {
    std::ostringstream os;
    auto dp = [&os](const char* g, int n) {
        if (n == 1)
            os << g;
        else if (n > 1)
            os << g << "^(" << n << ")";
    };
    if (orient == Orient::EF) {
        dp("E", a);
        dp("F", b);
    } else {
        dp("F", b);
        dp("E", a);
    }
    os << "1_{" << m << "}";
    return os.str();
}

CBIndex cb_canonicalize(int a, int b, int m, Orient orient) {
    if (a < 0 || b < 0) throw Error("negative divided power in canonical basis index");
    const int wall = b - a;
    if (orient == Orient::EF) {
        if (m > wall)
            throw OrientationInvalid("E^(" + std::to_string(a) + ")F^(" + std::to_string(b) +
                                     ")1_{" + std::to_string(m) + "} is not canonical (m > b-a)");
        return CBIndex{a, b, m, Orient::EF};
    }
    if (m < wall)
        throw OrientationInvalid("F^(" + std::to_string(b) + ")E^(" + std::to_string(a) +
                                 ")1_{" + std::to_string(m) + "} is not canonical (m < b-a)");
    if (m == wall) return CBIndex{a, b, m, Orient::EF};  // wall identification
    return CBIndex{a, b, m, Orient::FE};
}

CBIndex cb_index(int a, int b, int m) {
    return cb_canonicalize(a, b, m, m <= b - a ? Orient::EF : Orient::FE);
}

UdotElement UdotElement::basis(const CBIndex& i) {
    UdotElement x(i.m);
    x.add_term(i.a, i.b, RationalFunction::one());
    return x;
}

RationalFunction UdotElement::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? RationalFunction() : it->second;
}

void UdotElement::add_term(int a, int b, const RationalFunction& c) {
    assert(a >= 0 && b >= 0);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::pair{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UdotElement& UdotElement::operator+=(const UdotElement& o) {
    if (weight_ != o.weight_)
        throw WeightMismatch("adding elements from blocks 1_" + std::to_string(weight_) +
                             " and 1_" + std::to_string(o.weight_));
    for (const auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, c);
    return *this;
}

UdotElement& UdotElement::operator-=(const UdotElement& o) { return *this += -o; }

UdotElement UdotElement::operator-() const {
    UdotElement out(weight_);
    for (const auto& [ab, c] : terms_) out.terms_.emplace(ab, -c);
    return out;
}

UdotElement& UdotElement::mul_scalar(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [ab, v] : terms_) v *= c;
    return *this;
}

std::string UdotElement::str() const {
    if (terms_.empty()) return "0 (in block 1_{" + std::to_string(weight_) + "})";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ab, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "[" << c.str() << "] ";
        os << cb_index(ab.first, ab.second, weight_).str();
    }
    return os.str();
}

UdotElement mul_gen(Gen g, const UdotElement& x) {
    const int m = x.weight();
    UdotElement out(m);
    for (const auto& [ab, c] : x.terms()) {
        const auto [a, b] = ab;
        const bool ef = m <= b - a;  // stored orientation of this term
        if (g == Gen::E) {
            if (ef) {
                // E E^(a)F^(b)1_m = [a+1] E^(a+1)F^(b)1_m; off the wall this
                // stays canonical, on the wall reorder with qbinom(1, t).
                RationalFunction s = RationalFunction(q_integer(a + 1)) * c;
                out.add_term(a + 1, b, s);
                if (m == b - a && b >= 1) out.add_term(a, b - 1, s);
            } else {
                // E F^(b)E^(a)1_m via the divided-power commutator.
                out.add_term(a + 1, b, RationalFunction(q_integer(a + 1)) * c);
                if (b >= 1)
                    out.add_term(a, b - 1, RationalFunction(q_integer(m + 2 * a - b + 1)) * c);
            }
        } else {
            if (ef) {
                // Mirror of the FE case above.
                out.add_term(a, b + 1, RationalFunction(q_integer(b + 1)) * c);
                if (a >= 1)
                    out.add_term(a - 1, b, RationalFunction(q_integer(2 * b - m - a + 1)) * c);
            } else {
                // F F^(b)E^(a)1_m = [b+1] F^(b+1)E^(a)1_m, always canonical
                // (it lands on the wall exactly when m = b+1-a).
                out.add_term(a, b + 1, RationalFunction(q_integer(b + 1)) * c);
            }
        }
    }
    return out;
}

UdotElement mul_divpow(Gen g, int n, const UdotElement& x) {
    assert(n >= 0);
    UdotElement out = x;
    for (int k = 0; k < n; ++k) out = mul_gen(g, out);
    if (n >= 2)
        out.mul_scalar(RationalFunction(LaurentPoly::one(), q_factorial(n)));
    return out;
}

RationalFunction pairing_cb(const CBIndex& i1, const CBIndex& i2) {
    if (i1.m != i2.m) return RationalFunction();
    if (i1.b - i1.a != i2.b - i2.a) return RationalFunction();
    const int a = i1.a, b = i1.b, a2 = i2.a, m = i1.m;
    // Both indices share the orientation; the exponent sign follows it and
    // the two branches agree on the wall (a-b+m = 0 there).
    const int sign = (m <= b - a) ? 1 : -1;
    RationalFunction sum;
    const int s_lo = std::max(0, a - a2);
    const int s_hi = std::min(a, b);
    for (int s = s_lo; s <= s_hi; ++s) {
        const int t = a2 - a + s;
        const int e = -s * s - t * t + sign * (t + s) * (a - b + m);
        LaurentPoly den = poch_q2m(a - s) * poch_q2m(b - s);
        den *= poch_q2m(s) * poch_q2m(t);
        sum += RationalFunction(LaurentPoly::q_power(e), den);
    }
    return sum;
}

RationalFunction pairing(const UdotElement& x, const UdotElement& y) {
    if (x.weight() != y.weight()) return RationalFunction();
    RationalFunction sum;
    for (const auto& [ab1, c1] : x.terms()) {
        const CBIndex i1 = cb_index(ab1.first, ab1.second, x.weight());
        for (const auto& [ab2, c2] : y.terms()) {
            if (ab2.second - ab2.first != ab1.second - ab1.first) continue;
            const CBIndex i2 = cb_index(ab2.first, ab2.second, y.weight());
            sum += c1 * c2 * pairing_cb(i1, i2);
        }
    }
    return sum;
}

UHalfElement UHalfElement::divided_power(Side s, int n) {
    UHalfElement x;
    x.side = s;
    x.terms.emplace(n, RationalFunction::one());
    return x;
}

RationalFunction pairing_half(const UHalfElement& x, const UHalfElement& y) {
    if (x.side != y.side) throw Error("pairing_half: mismatched sides");
    RationalFunction sum;
    for (const auto& [n, c] : x.terms) {
        auto it = y.terms.find(n);
        if (it == y.terms.end()) continue;
        sum += c * it->second * inv_poch_q2m(n);
    }
    return sum;
}

LaurentPoly r_map_scale(int n) {
    assert(n >= 1);
    return LaurentPoly::q_power(n - 1);
}

}  // namespace qsl2
