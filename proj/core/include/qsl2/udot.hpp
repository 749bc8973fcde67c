#pragma once

#include <map>
#include <string>
#include <utility>

#include "qsl2/qcomb.hpp"
#include "qsl2/rational_function.hpp"

namespace qsl2 {

enum class Gen { E, F };

enum class Orient { EF, FE };

/// Index of a canonical basis element of the modified quantum sl2:
/// E^(a)F^(b)1_m for m <= b-a, F^(b)E^(a)1_m for m >= b-a, with the two
/// words identified on the wall m = b-a (stored in EF orientation there).
struct CBIndex {
    int a = 0;
    int b = 0;
    int m = 0;
    Orient orient = Orient::EF;

    int wall() const { return b - a; }

    auto key() const { return std::tuple(a, b, m, orient); }
    bool operator==(const CBIndex& o) const { return key() == o.key(); }
    bool operator<(const CBIndex& o) const { return key() < o.key(); }

    std::string str() const;  // "E^(a)F^(b)1_{m}" or "F^(b)E^(a)1_{m}"
};

/// Rewrites (a, b, m, orient) to canonical orientation. On the wall
/// m = b-a both orientations map to the same EF-stored index. Throws
/// OrientationInvalid for symbols that are not canonical basis elements
/// (EF with m > b-a, or FE with m < b-a).
CBIndex cb_canonicalize(int a, int b, int m, Orient orient);

/// Builds the canonical index for (a, b, m), choosing the orientation.
CBIndex cb_index(int a, int b, int m);

/// Finite Q(q)-linear combination of canonical basis elements, all in the
/// same block U.1_m. Terms are keyed by (a, b); the orientation is implied
/// by the weight. Immutable-by-convention: operations return new values.
class UdotElement {
public:
    using TermMap = std::map<std::pair<int, int>, RationalFunction>;

    explicit UdotElement(int weight) : weight_(weight) {}

    static UdotElement basis(const CBIndex& i);
    static UdotElement basis(int a, int b, int m) { return basis(cb_index(a, b, m)); }
    static UdotElement idempotent(int m) { return basis(0, 0, m); }  // 1_m

    int weight() const { return weight_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    RationalFunction coeff(int a, int b) const;
    CBIndex index_of(int a, int b) const { return cb_index(a, b, weight_); }

    void add_term(int a, int b, const RationalFunction& c);

    UdotElement& operator+=(const UdotElement& o);  // throws WeightMismatch
    UdotElement& operator-=(const UdotElement& o);
    UdotElement operator-() const;
    UdotElement& mul_scalar(const RationalFunction& c);

    friend UdotElement operator+(UdotElement a, const UdotElement& b) { return a += b; }
    friend UdotElement operator-(UdotElement a, const UdotElement& b) { return a -= b; }
    friend UdotElement operator*(const RationalFunction& c, UdotElement x) {
        return x.mul_scalar(c);
    }

    bool operator==(const UdotElement& o) const {
        return weight_ == o.weight_ && terms_ == o.terms_;
    }
    bool operator!=(const UdotElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    int weight_;
    TermMap terms_;
};

/// Left multiplication by a Chevalley generator, re-expressed in canonical
/// basis coordinates. Implemented from the divided-power merge and the
/// standard sl2 commutation across the wall; gated by the module-action
/// homomorphism suite before anything downstream trusts it.
UdotElement mul_gen(Gen g, const UdotElement& x);

/// Left multiplication by E^(n) or F^(n) (iterate mul_gen, divide by [n]!).
UdotElement mul_divpow(Gen g, int n, const UdotElement& x);

/// Closed-form bilinear pairing of two canonical basis elements. Zero when
/// the weights differ or b-a != b'-a'.
RationalFunction pairing_cb(const CBIndex& i1, const CBIndex& i2);

/// Bilinear extension of pairing_cb; symmetric; zero across weight blocks.
RationalFunction pairing(const UdotElement& x, const UdotElement& y);

/// Element of U^+ (side Plus, divided powers E^(a)) or U^- (side Minus,
/// divided powers F^(b)).
struct UHalfElement {
    enum class Side { Plus, Minus };
    Side side = Side::Plus;
    std::map<int, RationalFunction> terms;  // divided-power degree -> coefficient

    static UHalfElement divided_power(Side s, int n);
};

/// (E^(m), E^(n)) = (F^(m), F^(n)) = delta_{m,n} (q^{-2}; q^{-2})_m^{-1},
/// extended bilinearly. Pre: same side.
RationalFunction pairing_half(const UHalfElement& x, const UHalfElement& y);

/// Common scaling of the maps ir and r_i on divided powers: both send the
/// n-th divided power of either generator to q^{n-1} times the (n-1)-st.
/// The constant is pinned by requiring the commutator formula for [E, F^(b)]
/// to reproduce E F^(b) eta_n = [n-b+1] F^(b-1) eta_n on L(n); see tests.
LaurentPoly r_map_scale(int n);

}  // namespace qsl2
