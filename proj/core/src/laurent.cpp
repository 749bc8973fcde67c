#include "qsl2/laurent.hpp"

#include <sstream>
#include <vector>

namespace qsl2 {

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

Rational LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& LaurentPoly::leading_coeff() const { return terms_.rbegin()->second; }

void LaurentPoly::add_term(int exp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    // Multiply with the smaller operand outermost.
    const LaurentPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const LaurentPoly& big = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [ea, ca] : small.terms_)
        for (const auto& [eb, cb] : big.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::mul_scalar(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly& LaurentPoly::mul_q_power(int exp) {
    if (exp == 0 || terms_.empty()) return *this;
    TermMap shifted;
    for (const auto& [e, c] : terms_) shifted.emplace(e + exp, c);
    terms_ = std::move(shifted);
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly out = one();
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1u) out *= base;
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (abs == 1);
        if (!unit || e == 0) os << rational_to_string(abs);
        if (e != 0) {
            if (!unit) os << "*";
            os << (e == 1 ? "q" : "q^" + std::to_string(e));
        }
    }
    return os.str();
}

namespace {

// Dense integer polynomial in ascending degree, no trailing zeros.
using IntVec = std::vector<Integer>;

Integer content(const IntVec& v) {
    Integer g = 0;
    for (const auto& c : v) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

void strip(IntVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Converts to a primitive integer polynomial, shifted so degree 0 is the
// lowest stored exponent (the q-power factor is irrelevant for gcd).
IntVec to_primitive(const LaurentPoly& p) {
    IntVec out;
    if (p.is_zero()) return out;
    int lo = p.min_exp();
    out.assign(static_cast<size_t>(p.max_exp() - lo) + 1, Integer(0));
    Integer den_lcm = 1;
    for (const auto& [e, c] : p.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    for (const auto& [e, c] : p.terms()) {
        Rational scaled = c * den_lcm;
        out[static_cast<size_t>(e - lo)] = boost::multiprecision::numerator(scaled);
    }
    Integer g = content(out);
    if (g > 1)
        for (auto& c : out) c /= g;
    if (out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

// Primitive pseudo-remainder step: r = lead(b)^(da-db+1) * a mod b, made primitive.
IntVec prem_primitive(IntVec a, const IntVec& b) {
    const size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        size_t da = a.size() - 1;
        Integer la = a.back();
        // a = lb*a - la * x^(da-db) * b
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        strip(a);
        Integer g = content(a);
        if (g > 1)
            for (auto& c : a) c /= g;
    }
    return a;
}

}  // namespace

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero() || a.is_monomial() || b.is_zero() || b.is_monomial())
        return LaurentPoly::one();
    IntVec u = to_primitive(a);
    IntVec v = to_primitive(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        IntVec r = prem_primitive(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    if (u.size() == 1) return LaurentPoly::one();
    if (u.back() < 0)
        for (auto& c : u) c = -c;
    LaurentPoly g;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) g.add_term(static_cast<int>(i), Rational(u[i]));
    return g;
}

LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("lp_div_exact by zero");
    if (a.is_zero()) return LaurentPoly();
    if (b.is_monomial()) {
        LaurentPoly out = a;
        out.mul_q_power(-b.min_exp());
        out.mul_scalar(Rational(1) / b.terms().begin()->second);
        return out;
    }
    // Long division on the polynomial parts; the q-power shift is carried over.
    LaurentPoly rem = a;
    LaurentPoly quot;
    const int db = b.max_exp() - b.min_exp();
    const Rational& lb = b.leading_coeff();
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= db) {
        Rational c = rem.leading_coeff() / lb;
        int e = rem.max_exp() - b.max_exp();
        quot.add_term(e, c);
        LaurentPoly sub = b;
        sub.mul_scalar(c);
        sub.mul_q_power(e);
        rem -= sub;
    }
    if (!rem.is_zero()) throw Error("lp_div_exact: not divisible");
    return quot;
}

}  // namespace qsl2
