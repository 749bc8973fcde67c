#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsl2/qseries.hpp"
#include "qsl2/udot.hpp"

namespace qsl2 {

/// Index of the PBW basis element w_m(a, b) = E^(a) *_m F^(b).
struct PBWIndex {
    int a = 0;
    int b = 0;
    int m = 0;

    auto key() const { return std::tuple(a, b, m); }
    bool operator==(const PBWIndex& o) const { return key() == o.key(); }
    bool operator<(const PBWIndex& o) const { return key() < o.key(); }

    std::string str() const;  // "w_{m}(a,b)"
};

/// Finite linear combination of PBW symbols in one weight block.
class PBWCombo {
public:
    using TermMap = std::map<std::pair<int, int>, RationalFunction>;

    explicit PBWCombo(int weight) : weight_(weight) {}

    int weight() const { return weight_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RationalFunction coeff(int a, int b) const;
    void add_term(int a, int b, const RationalFunction& c);

    PBWCombo& operator+=(const PBWCombo& o);  // throws WeightMismatch
    PBWCombo& mul_scalar(const RationalFunction& c);

    bool operator==(const PBWCombo& o) const {
        return weight_ == o.weight_ && terms_ == o.terms_;
    }
    bool operator!=(const PBWCombo& o) const { return !(*this == o); }

    std::string str() const;

private:
    int weight_;
    TermMap terms_;
};

/// Square transition matrix over the ladder {(a-s, b-s)}_{s=0..min(a,b)},
/// listed with (a, b) first. entries[row][col] is the coefficient of the
/// row's target symbol in the expansion of the column's source symbol, so
/// the matrix is unital lower triangular in the ladder order.
struct TransitionMatrix {
    int m = 0;
    std::vector<std::pair<int, int>> ladder;
    std::vector<std::vector<RationalFunction>> entries;

    size_t size() const { return ladder.size(); }
    bool is_unital_lower_triangular() const;
    bool is_identity() const;
};

TransitionMatrix tm_mul(const TransitionMatrix& a, const TransitionMatrix& b);

/// Expansion of a canonical basis element in the PBW basis; the sum runs
/// over the ladder with leading coefficient 1. On the wall both closed
/// formulas apply and are checked against each other.
PBWCombo cb_to_pbw(const CBIndex& i);

/// Expansion of w_m(a, b) in the canonical basis; leading coefficient 1.
UdotElement pbw_to_cb(const PBWIndex& i);

/// Linear extension of pbw_to_cb.
UdotElement pbw_to_cb(const PBWCombo& x);

/// The CB->PBW and PBW->CB ladder matrices; their products (both orders)
/// are the identity.
std::pair<TransitionMatrix, TransitionMatrix> ladder_matrices(int a, int b, int m);

/// Orthogonality pairing of PBW basis elements:
/// delta / ((q^{-2}; q^{-2})_a (q^{-2}; q^{-2})_b).
RationalFunction pairing_pbw(const PBWIndex& i1, const PBWIndex& i2);

RationalFunction pairing_pbw(const PBWCombo& x, const PBWCombo& y);

/// Pairing computed by expanding both arguments through cb_to_pbw and
/// pairing term-wise; agrees exactly with qsl2::pairing.
RationalFunction pairing_via_pbw(const UdotElement& x, const UdotElement& y);

/// The rescaling factors turning the PBW basis into its dual basis.
RationalFunction dual_pbw_scale(const PBWIndex& i);

struct PositivityEntry {
    int s = 0;                 // ladder step
    RationalFunction coeff;    // CB->PBW coefficient at this step
    QSeries series;            // its q^{-1}-expansion
    bool leading_is_one = false;  // only meaningful for s = 0
    bool ok = false;
};

struct PositivityReport {
    CBIndex index;
    int order = kDefaultSeriesOrder;
    bool pass = false;
    std::vector<PositivityEntry> entries;
};

/// Expands every cb_to_pbw coefficient as a q^{-1}-series through the given
/// order; passes when the s = 0 coefficient is exactly 1 and every other
/// series starts at q^{-1} or deeper with nonnegative integer coefficients.
PositivityReport positivity_report(const CBIndex& i, int order = kDefaultSeriesOrder);

namespace detail {
// Individual closed formulas, exposed for the wall-consistency checks.
PBWCombo cb_to_pbw_ef(int a, int b, int m);   // valid for m <= b-a
PBWCombo cb_to_pbw_fe(int a, int b, int m);   // valid for m >= b-a
UdotElement pbw_to_cb_ef(int a, int b, int m);
UdotElement pbw_to_cb_fe(int a, int b, int m);
}  // namespace detail

}  // namespace qsl2
