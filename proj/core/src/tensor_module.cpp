#include "qsl2/tensor_module.hpp"

#include <cassert>
#include <sstream>

namespace qsl2 {

WeightParam WeightParam::concrete(int p, int m) {
    if (p < 0 || p < -m)
        throw Error("concrete weight parameter needs p >= max(0, -m); got p=" +
                    std::to_string(p) + ", m=" + std::to_string(m));
    return WeightParam{Mode::Concrete, p, m};
}

TensorVector TensorVector::vacuum(const WeightParam& param) {
    return pure_tensor(param, 0, 0);
}

TensorVector TensorVector::pure_tensor(const WeightParam& param, int a, int b) {
    TensorVector v(param);
    v.add_term(a, b, UPoly::one());
    return v;
}

UPoly TensorVector::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? UPoly() : it->second;
}

RationalFunction TensorVector::coeff_concrete(int a, int b) const {
    UPoly c = coeff(a, b);
    if (!c.is_constant_in_u()) throw Error("coefficient is not constant in u");
    return c.coeff_u(0);
}

void TensorVector::add_term(int a, int b, UPoly c) {
    assert(a >= 0 && b >= 0);
    if (!param_.is_symbolic()) {
        if (a > param_.p || b > param_.p + param_.m) return;  // zero in the module
        if (!c.is_constant_in_u()) c = UPoly(c.eval_u_qpow(param_.p));
    }
    if (c.is_zero()) return;
    auto it = terms_.find({a, b});
    if (it == terms_.end()) {
        terms_.emplace(std::pair{a, b}, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (param_ != o.param_) throw WeightMismatch("adding vectors from different tensor modules");
    for (const auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) { return *this += -o; }

TensorVector TensorVector::operator-() const {
    TensorVector out(param_);
    for (const auto& [ab, c] : terms_) out.terms_.emplace(ab, -c);
    return out;
}

TensorVector& TensorVector::mul_scalar(const UPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    TermMap scaled;
    for (const auto& [ab, v] : terms_) {
        UPoly prod = v * c;
        if (!param_.is_symbolic() && !prod.is_constant_in_u())
            prod = UPoly(prod.eval_u_qpow(param_.p));
        if (!prod.is_zero()) scaled.emplace(ab, std::move(prod));
    }
    terms_ = std::move(scaled);
    return *this;
}

TensorVector& TensorVector::mul_scalar(const RationalFunction& c) {
    return mul_scalar(UPoly(c));
}

bool TensorVector::all_bounded() const {
    for (const auto& [ab, c] : terms_)
        if (!c.is_bounded()) return false;
    return true;
}

bool TensorVector::all_asympt_zero() const {
    for (const auto& [ab, c] : terms_)
        if (!c.is_asympt_zero()) return false;
    return true;
}

std::string TensorVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ab, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "] (" << ab.first << "," << ab.second << ")";
    }
    return os.str();
}

namespace {

// [p + c] with p symbolic: (q^c u^{-1} - q^{-c} u)/(q - q^{-1}).
UPoly sym_qint_p(int c) {
    LaurentPoly qmq = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
    UPoly out;
    out.add_term(-1, RationalFunction(LaurentPoly::q_power(c), qmq));
    out.add_term(1, -RationalFunction(LaurentPoly::q_power(-c), qmq));
    return out;
}

UPoly upoly_qint(int n) { return UPoly(RationalFunction(q_integer(n))); }

}  // namespace

TensorVector act_gen(GenK g, const TensorVector& v) {
    const WeightParam& wp = v.param();
    const int m = wp.m;
    TensorVector out(wp);
    for (const auto& [ab, c] : v.terms()) {
        const auto [a, b] = ab;
        switch (g) {
            case GenK::E: {
                // E (x) 1
                out.add_term(a + 1, b, upoly_qint(a + 1) * c);
                // K (x) E: the K-twist q^{-p+2a} times [p+m-b+1] on the right factor
                if (b >= 1) {
                    UPoly tw = UPoly::monomial(RationalFunction::q_power(2 * a), 1) *
                               sym_qint_p(m - b + 1);
                    out.add_term(a, b - 1, tw * c);
                }
                break;
            }
            case GenK::F: {
                // F (x) K^{-1}: [p-a+1] on the left factor, twist q^{-(p+m-2b)}
                if (a >= 1) {
                    UPoly tw = UPoly::monomial(RationalFunction::q_power(2 * b - m), 1) *
                               sym_qint_p(1 - a);
                    out.add_term(a - 1, b, tw * c);
                }
                // 1 (x) F
                out.add_term(a, b + 1, upoly_qint(b + 1) * c);
                break;
            }
            case GenK::K: {
                UPoly s = c;
                s.mul_scalar(RationalFunction::q_power(m + 2 * (a - b)));
                out.add_term(a, b, std::move(s));
                break;
            }
            case GenK::Kinv: {
                UPoly s = c;
                s.mul_scalar(RationalFunction::q_power(-(m + 2 * (a - b))));
                out.add_term(a, b, std::move(s));
                break;
            }
        }
    }
    return out;
}

TensorVector act_divpow(Gen g, int n, const TensorVector& v) {
    assert(n >= 0);
    TensorVector out = v;
    for (int k = 0; k < n; ++k) out = act_gen(g == Gen::E ? GenK::E : GenK::F, out);
    if (n >= 2)
        out.mul_scalar(RationalFunction(LaurentPoly::one(), q_factorial(n)));
    return out;
}

namespace {

void require_vacuum(const TensorVector& v0) {
    if (v0.terms().size() != 1 || !v0.coeff(0, 0).is_one())
        throw Error("closed actions expect the vacuum vector xi (x) eta");
}

enum class ClosedKind { EF, FE };

TensorVector closed_action(ClosedKind kind, int a, int b, const TensorVector& v0) {
    require_vacuum(v0);
    assert(a >= 0 && b >= 0);
    const WeightParam& wp = v0.param();
    const int m = wp.m;
    TensorVector out(wp);
    for (int s = 0; s <= std::min(a, b); ++s) {
        const int e = kind == ClosedKind::EF ? -s * s + s * (a - b + m)
                                             : -s * s - s * (a - b + m);
        UPoly coeff(RationalFunction::q_power(e));
        for (int d = 1; d <= s; ++d) {
            const int top = kind == ClosedKind::EF ? 2 * b - 2 * m - 2 * d : 2 * a - 2 * d;
            UPoly factor = UPoly::one();
            factor -= UPoly::monomial(RationalFunction::q_power(top), 2);  // 1 - q^top u^2
            LaurentPoly den = LaurentPoly::one();
            den.add_term(-2 * d, Rational(-1));  // 1 - q^{-2d}
            factor.mul_scalar(RationalFunction(LaurentPoly::one(), den));
            coeff *= factor;
        }
        out.add_term(a - s, b - s, std::move(coeff));
    }
    return out;
}

}  // namespace

TensorVector closed_action_EF(int a, int b, const TensorVector& v0) {
    return closed_action(ClosedKind::EF, a, b, v0);
}

TensorVector closed_action_FE(int a, int b, const TensorVector& v0) {
    return closed_action(ClosedKind::FE, a, b, v0);
}

TensorVector apply_udot(const UdotElement& x, const TensorVector& v0) {
    if (x.weight() != v0.param().m)
        throw WeightMismatch("element of block 1_" + std::to_string(x.weight()) +
                             " applied to a module with m=" + std::to_string(v0.param().m));
    TensorVector out(v0.param());
    for (const auto& [ab, c] : x.terms()) {
        const auto [a, b] = ab;
        TensorVector part = (x.weight() <= b - a) ? closed_action_EF(a, b, v0)
                                                  : closed_action_FE(a, b, v0);
        part.mul_scalar(c);
        out += part;
    }
    return out;
}

UPoly gram_lowest_factor(int a, const WeightParam& param) {
    assert(a >= 0);
    UPoly g = UPoly::one();
    for (int k = 1; k <= a; ++k) {
        // (E^(k)xi, E^(k)xi) = (1/[k]) (E^(k-1)xi, rho(E) E^(k)xi), with
        // rho(E) = q K F: F drops to [p-k+1] E^(k-1)xi, then K reads the
        // weight q^{-p+2(k-1)}.
        UPoly step = UPoly::monomial(RationalFunction::q_power(2 * k - 1), 1) * sym_qint_p(1 - k);
        step.mul_scalar(RationalFunction(LaurentPoly::one(), q_integer(k)));
        g *= step;
    }
    if (!param.is_symbolic()) return UPoly(g.eval_u_qpow(param.p));
    return g;
}

UPoly gram_highest_factor(int b, const WeightParam& param) {
    assert(b >= 0);
    const int m = param.m;
    UPoly g = UPoly::one();
    for (int k = 1; k <= b; ++k) {
        // (F^(k)eta, F^(k)eta) = (1/[k]) (F^(k-1)eta, rho(F) F^(k)eta), with
        // rho(F) = q^{-1} E K^{-1}: the twist is q^{-(p+m-2k)}, then E gives
        // [p+m-k+1] F^(k-1)eta.
        UPoly step =
            UPoly::monomial(RationalFunction::q_power(2 * k - m - 1), 1) * sym_qint_p(m - k + 1);
        step.mul_scalar(RationalFunction(LaurentPoly::one(), q_integer(k)));
        g *= step;
    }
    if (!param.is_symbolic()) return UPoly(g.eval_u_qpow(param.p));
    return g;
}

UPoly gram(const TensorVector& v, const TensorVector& w) {
    if (v.param() != w.param())
        throw WeightMismatch("gram of vectors from different tensor modules");
    UPoly sum;
    for (const auto& [ab, cv] : v.terms()) {
        auto it = w.terms().find(ab);
        if (it == w.terms().end()) continue;  // distinct labels are orthogonal
        UPoly prod = cv * it->second;
        prod *= gram_lowest_factor(ab.first, v.param());
        prod *= gram_highest_factor(ab.second, v.param());
        sum += prod;
    }
    if (v.param().is_symbolic() && !sum.is_bounded())
        throw Unbounded("symbolic Gram value left Q(q)[t]: " + sum.str());
    return sum;
}

std::map<std::pair<int, int>, RationalFunction> limit_vector(const TensorVector& v) {
    if (!v.param().is_symbolic()) throw Error("limit_vector expects a symbolic vector");
    std::map<std::pair<int, int>, RationalFunction> out;
    for (const auto& [ab, c] : v.terms()) {
        if (!c.is_bounded())
            throw Unbounded("unbounded coefficient at label (" + std::to_string(ab.first) + "," +
                            std::to_string(ab.second) + "): " + c.str());
        RationalFunction value = c.coeff_u(0);
        if (!value.is_zero()) out.emplace(ab, std::move(value));
    }
    return out;
}

std::vector<PureTensorTerm> unfuse(const UdotElement& x) {
    TensorVector v0 = TensorVector::vacuum(WeightParam::symbolic(x.weight()));
    auto limits = limit_vector(apply_udot(x, v0));
    std::vector<PureTensorTerm> out;
    out.reserve(limits.size());
    for (auto& [ab, c] : limits) out.push_back(PureTensorTerm{ab.first, ab.second, std::move(c)});
    return out;
}

}  // namespace qsl2
