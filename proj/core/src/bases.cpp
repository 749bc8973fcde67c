#include "qsl2/bases.hpp"

#include <cassert>
#include <sstream>

namespace qsl2 {

std::string PBWIndex::str() const {
    std::ostringstream os;
    os << "w_{" << m << "}(" << a << "," << b << ")";
    return os.str();
}

RationalFunction PBWCombo::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? RationalFunction() : it->second;
}

void PBWCombo::add_term(int a, int b, const RationalFunction& c) {
    assert(a >= 0 && b >= 0);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::pair{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PBWCombo& PBWCombo::operator+=(const PBWCombo& o) {
    if (weight_ != o.weight_)
        throw WeightMismatch("adding PBW combinations from different blocks");
    for (const auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, c);
    return *this;
}

PBWCombo& PBWCombo::mul_scalar(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [ab, v] : terms_) v *= c;
    return *this;
}

std::string PBWCombo::str() const {
    if (terms_.empty()) return "0 (in block 1_{" + std::to_string(weight_) + "})";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (!it->second.is_one()) os << "[" << it->second.str() << "] ";
        os << PBWIndex{it->first.first, it->first.second, weight_}.str();
    }
    return os.str();
}

bool TransitionMatrix::is_unital_lower_triangular() const {
    for (size_t i = 0; i < size(); ++i) {
        if (!entries[i][i].is_one()) return false;
        for (size_t j = i + 1; j < size(); ++j)
            if (!entries[i][j].is_zero()) return false;
    }
    return true;
}

bool TransitionMatrix::is_identity() const {
    for (size_t i = 0; i < size(); ++i)
        for (size_t j = 0; j < size(); ++j) {
            if (i == j ? !entries[i][j].is_one() : !entries[i][j].is_zero()) return false;
        }
    return true;
}

TransitionMatrix tm_mul(const TransitionMatrix& a, const TransitionMatrix& b) {
    assert(a.size() == b.size() && a.m == b.m);
    TransitionMatrix out;
    out.m = a.m;
    out.ladder = a.ladder;
    const size_t n = a.size();
    out.entries.assign(n, std::vector<RationalFunction>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            RationalFunction acc;
            for (size_t k = 0; k < n; ++k) {
                if (a.entries[i][k].is_zero() || b.entries[k][j].is_zero()) continue;
                acc += a.entries[i][k] * b.entries[k][j];
            }
            out.entries[i][j] = acc;
        }
    return out;
}

namespace detail {

PBWCombo cb_to_pbw_ef(int a, int b, int m) {
    assert(m <= b - a);
    PBWCombo out(m);
    for (int s = 0; s <= std::min(a, b); ++s) {
        int e = -s * s + s * (a - b + m);
        out.add_term(a - s, b - s, RationalFunction(LaurentPoly::q_power(e), poch_q2m(s)));
    }
    return out;
}

PBWCombo cb_to_pbw_fe(int a, int b, int m) {
    assert(m >= b - a);
    PBWCombo out(m);
    for (int s = 0; s <= std::min(a, b); ++s) {
        int e = -s * s - s * (a - b + m);
        out.add_term(a - s, b - s, RationalFunction(LaurentPoly::q_power(e), poch_q2m(s)));
    }
    return out;
}

UdotElement pbw_to_cb_ef(int a, int b, int m) {
    assert(m <= b - a);
    UdotElement out(m);
    for (int s = 0; s <= std::min(a, b); ++s) {
        LaurentPoly num = LaurentPoly::q_power(-s + s * (a - b + m));
        if (s % 2 != 0) num = -num;
        out.add_term(a - s, b - s, RationalFunction(num, poch_q2m(s)));
    }
    return out;
}

UdotElement pbw_to_cb_fe(int a, int b, int m) {
    assert(m >= b - a);
    UdotElement out(m);
    for (int s = 0; s <= std::min(a, b); ++s) {
        LaurentPoly num = LaurentPoly::q_power(-s - s * (a - b + m));
        if (s % 2 != 0) num = -num;
        out.add_term(a - s, b - s, RationalFunction(num, poch_q2m(s)));
    }
    return out;
}

}  // namespace detail

PBWCombo cb_to_pbw(const CBIndex& i) {
    if (i.m == i.wall()) {
        // Both closed formulas apply on the wall; they must coincide.
        PBWCombo ef = detail::cb_to_pbw_ef(i.a, i.b, i.m);
        PBWCombo fe = detail::cb_to_pbw_fe(i.a, i.b, i.m);
        if (ef != fe) throw Error("wall inconsistency in cb_to_pbw at " + i.str());
        return ef;
    }
    return i.orient == Orient::EF ? detail::cb_to_pbw_ef(i.a, i.b, i.m)
                                  : detail::cb_to_pbw_fe(i.a, i.b, i.m);
}

UdotElement pbw_to_cb(const PBWIndex& i) {
    if (i.m == i.b - i.a) {
        UdotElement ef = detail::pbw_to_cb_ef(i.a, i.b, i.m);
        UdotElement fe = detail::pbw_to_cb_fe(i.a, i.b, i.m);
        if (ef != fe) throw Error("wall inconsistency in pbw_to_cb at " + i.str());
        return ef;
    }
    return i.m < i.b - i.a ? detail::pbw_to_cb_ef(i.a, i.b, i.m)
                           : detail::pbw_to_cb_fe(i.a, i.b, i.m);
}

UdotElement pbw_to_cb(const PBWCombo& x) {
    UdotElement out(x.weight());
    for (const auto& [ab, c] : x.terms()) {
        UdotElement part = pbw_to_cb(PBWIndex{ab.first, ab.second, x.weight()});
        part.mul_scalar(c);
        out += part;
    }
    return out;
}

std::pair<TransitionMatrix, TransitionMatrix> ladder_matrices(int a, int b, int m) {
    const int len = std::min(a, b) + 1;
    TransitionMatrix c2p, p2c;
    c2p.m = p2c.m = m;
    for (int k = 0; k < len; ++k) {
        c2p.ladder.emplace_back(a - k, b - k);
        p2c.ladder.emplace_back(a - k, b - k);
    }
    c2p.entries.assign(len, std::vector<RationalFunction>(len));
    p2c.entries.assign(len, std::vector<RationalFunction>(len));
    for (int j = 0; j < len; ++j) {
        PBWCombo col = cb_to_pbw(cb_index(a - j, b - j, m));
        for (const auto& [ab, c] : col.terms()) {
            int row = a - ab.first;
            assert(row >= j && row < len && b - ab.second == row);
            c2p.entries[static_cast<size_t>(row)][static_cast<size_t>(j)] = c;
        }
        UdotElement col2 = pbw_to_cb(PBWIndex{a - j, b - j, m});
        for (const auto& [ab, c] : col2.terms()) {
            int row = a - ab.first;
            assert(row >= j && row < len && b - ab.second == row);
            p2c.entries[static_cast<size_t>(row)][static_cast<size_t>(j)] = c;
        }
    }
    if (!c2p.is_unital_lower_triangular() || !p2c.is_unital_lower_triangular())
        throw Error("transition matrices are not unital triangular");
    return {c2p, p2c};
}

RationalFunction pairing_pbw(const PBWIndex& i1, const PBWIndex& i2) {
    if (!(i1 == i2)) return RationalFunction();
    return RationalFunction(LaurentPoly::one(), poch_q2m(i1.a) * poch_q2m(i1.b));
}

RationalFunction pairing_pbw(const PBWCombo& x, const PBWCombo& y) {
    if (x.weight() != y.weight()) return RationalFunction();
    RationalFunction sum;
    for (const auto& [ab, cx] : x.terms()) {
        auto it = y.terms().find(ab);
        if (it == y.terms().end()) continue;
        sum += cx * it->second *
               RationalFunction(LaurentPoly::one(), poch_q2m(ab.first) * poch_q2m(ab.second));
    }
    return sum;
}

RationalFunction pairing_via_pbw(const UdotElement& x, const UdotElement& y) {
    if (x.weight() != y.weight()) return RationalFunction();
    auto expand = [](const UdotElement& z) {
        PBWCombo out(z.weight());
        for (const auto& [ab, c] : z.terms()) {
            PBWCombo part = cb_to_pbw(cb_index(ab.first, ab.second, z.weight()));
            part.mul_scalar(c);
            out += part;
        }
        return out;
    };
    return pairing_pbw(expand(x), expand(y));
}

RationalFunction dual_pbw_scale(const PBWIndex& i) {
    return RationalFunction(poch_q2m(i.a) * poch_q2m(i.b));
}

PositivityReport positivity_report(const CBIndex& i, int order) {
    PositivityReport report;
    report.index = i;
    report.order = order;
    report.pass = true;
    PBWCombo expansion = cb_to_pbw(i);
    for (int s = 0; s <= std::min(i.a, i.b); ++s) {
        PositivityEntry entry;
        entry.s = s;
        entry.coeff = expansion.coeff(i.a - s, i.b - s);
        entry.series = series_expand(entry.coeff, order);
        if (s == 0) {
            entry.leading_is_one = entry.coeff.is_one();
            entry.ok = entry.leading_is_one;
        } else {
            // Non-leading coefficients expand in q^{-1} N[[q^{-1}]]; a series
            // whose support starts beyond the truncation order is vacuously
            // fine through that order.
            entry.ok = entry.series.lowest >= 1 && entry.series.all_nonneg_integers();
        }
        report.pass = report.pass && entry.ok;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace qsl2
