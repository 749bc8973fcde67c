#include "qsl2/upoly.hpp"

#include <cassert>
#include <sstream>

namespace qsl2 {

UPoly UPoly::monomial(const RationalFunction& c, int uexp) {
    UPoly p;
    p.add_term(uexp, c);
    return p;
}

bool UPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

bool UPoly::is_constant_in_u() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool UPoly::is_bounded() const {
    for (const auto& [e, c] : terms_)
        if (e < 0 || e % 2 != 0) return false;
    return true;
}

bool UPoly::is_asympt_zero() const {
    return is_bounded() && terms_.find(0) == terms_.end();
}

RationalFunction UPoly::coeff_u(int uexp) const {
    auto it = terms_.find(uexp);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void UPoly::add_term(int uexp, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(uexp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UPoly& UPoly::operator+=(const UPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    *this = *this * o;
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

UPoly& UPoly::mul_scalar(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

RationalFunction UPoly::eval_u0() const {
    if (!is_bounded())
        throw Unbounded("u -> 0 limit of an unbounded value: " + str());
    return coeff_u(0);
}

RationalFunction UPoly::eval_u_qpow(int p) const {
    RationalFunction out;
    for (const auto& [e, c] : terms_) out += c * RationalFunction::q_power(-p * e);
    return out;
}

std::string UPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   c.num().terms().size() == 1;
        if (first) {
            first = false;
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else if (neg) {
            os << " - ";
            cs = cs.substr(1);
        } else {
            os << " + ";
        }
        bool unit = (cs == "1");
        if (e == 0) {
            os << cs;
            continue;
        }
        if (!unit) {
            if (c.den().is_one() && c.num().terms().size() > 1)
                os << "(" << cs << ")*";
            else
                os << cs << "*";
        }
        os << (e == 1 ? "u" : "u^" + std::to_string(e));
    }
    return os.str();
}

UPoly pochhammer_q2(const UPoly& a, int m) {
    assert(m >= 0);
    if (!a.is_zero() && !a.is_monomial())
        throw Error("pochhammer_q2 expects a monomial argument");
    UPoly out = UPoly::one();
    for (int s = 0; s < m; ++s) {
        UPoly factor = UPoly::one();
        UPoly shifted = a;
        shifted.mul_scalar(RationalFunction::q_power(-2 * s));
        factor -= shifted;
        out *= factor;
    }
    return out;
}

}  // namespace qsl2
