#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsl2/udot.hpp"
#include "qsl2/upoly.hpp"

namespace qsl2 {

/// Parameters of the tensor module wL(p) (x) L(p+m): either a concrete
/// p >= max(0, -m), or p symbolic (coefficients live in Q(q)[u, u^{-1}],
/// u = q^{-p}, and p is treated as formally large).
struct WeightParam {
    enum class Mode { Symbolic, Concrete };

    Mode mode = Mode::Symbolic;
    int p = 0;  // meaningful in concrete mode only
    int m = 0;

    static WeightParam symbolic(int m) { return WeightParam{Mode::Symbolic, 0, m}; }
    static WeightParam concrete(int p, int m);

    bool is_symbolic() const { return mode == Mode::Symbolic; }

    bool operator==(const WeightParam& o) const {
        return mode == o.mode && m == o.m && (is_symbolic() || p == o.p);
    }
    bool operator!=(const WeightParam& o) const { return !(*this == o); }
};

/// Vector in wL(p) (x) L(p+m). The label (a, b) stands for the pure tensor
/// E^(a) xi_{-p} (x) F^(b) eta_{p+m}. In concrete mode coefficients are
/// constant in u (the value in Q(q)) and labels beyond the module tops are
/// silently dropped -- those basis vectors are zero in the module.
class TensorVector {
public:
    using TermMap = std::map<std::pair<int, int>, UPoly>;

    explicit TensorVector(const WeightParam& param) : param_(param) {}

    /// xi_{-p} (x) eta_{p+m}, the vacuum vector at label (0, 0).
    static TensorVector vacuum(const WeightParam& param);
    /// Single pure tensor with coefficient 1 at (a, b).
    static TensorVector pure_tensor(const WeightParam& param, int a, int b);

    const WeightParam& param() const { return param_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UPoly coeff(int a, int b) const;
    /// Concrete-mode coefficient as a rational function.
    RationalFunction coeff_concrete(int a, int b) const;

    /// Adds c at (a, b); in concrete mode substitutes u = q^{-p} and drops
    /// labels past the module tops.
    void add_term(int a, int b, UPoly c);

    TensorVector& operator+=(const TensorVector& o);  // throws WeightMismatch
    TensorVector& operator-=(const TensorVector& o);
    TensorVector operator-() const;
    TensorVector& mul_scalar(const UPoly& c);
    TensorVector& mul_scalar(const RationalFunction& c);

    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }

    bool operator==(const TensorVector& o) const {
        return param_ == o.param_ && terms_ == o.terms_;
    }
    bool operator!=(const TensorVector& o) const { return !(*this == o); }

    /// All coefficients bounded (symbolic mode); trivially true in concrete mode.
    bool all_bounded() const;
    /// All coefficients asymptotically zero.
    bool all_asympt_zero() const;

    std::string str() const;

private:
    WeightParam param_;
    TermMap terms_;
};

enum class GenK { E, F, K, Kinv };

/// Exact action of a generator through the comultiplication
/// Delta(E) = E (x) 1 + K (x) E, Delta(F) = F (x) K^{-1} + 1 (x) F,
/// with the standard divided-power weight action on each factor.
TensorVector act_gen(GenK g, const TensorVector& v);

/// Action of E^(n) / F^(n): iterate act_gen, then divide by [n]!.
TensorVector act_divpow(Gen g, int n, const TensorVector& v);

/// E^(a)F^(b) applied to the vacuum, from the closed sum
///   sum_s q^{-s^2+s(a-b+m)} prod_{d=1}^{s} (1-q^{2b-2m-2d}u^2)/(1-q^{-2d})
/// on labels (a-s, b-s). Pre: v0 is the vacuum vector.
TensorVector closed_action_EF(int a, int b, const TensorVector& v0);

/// F^(b)E^(a) applied to the vacuum; mirror closed sum with
/// q^{-s^2-s(a-b+m)} and factors (1-q^{2a-2d}u^2)/(1-q^{-2d}).
TensorVector closed_action_FE(int a, int b, const TensorVector& v0);

/// Action of a canonical-basis linear combination on the vacuum, routed
/// through the closed formulas per orientation. Throws WeightMismatch when
/// the element's block is not the module's m.
TensorVector apply_udot(const UdotElement& x, const TensorVector& v0);

/// Gram value of one factor: (E^(a) xi, E^(a) xi) on wL(p), computed by
/// stripping one generator at a time across the form via rho(E) = q K F.
UPoly gram_lowest_factor(int a, const WeightParam& param);
/// (F^(b) eta, F^(b) eta) on L(p+m), via rho(F) = q^{-1} E K^{-1}.
UPoly gram_highest_factor(int b, const WeightParam& param);

/// Bilinear form on the tensor module, (x (x) y, x' (x) y') = (x,x')(y,y').
/// In symbolic mode the result is asserted bounded (throws Unbounded
/// otherwise -- that would indicate a bug, not bad input).
UPoly gram(const TensorVector& v, const TensorVector& w);

/// u -> 0 limit, coefficient-wise. Pre: symbolic mode, all coefficients
/// bounded; throws Unbounded naming the offending label.
std::map<std::pair<int, int>, RationalFunction> limit_vector(const TensorVector& v);

/// One summand of a pure-tensor expansion in U^+ (x) U^-, in divided-power
/// coordinates: coeff * E^(a) (x) F^(b).
struct PureTensorTerm {
    int a = 0;
    int b = 0;
    RationalFunction coeff;
};

/// The inverse of fusion: act symbolically on the vacuum, take the limit,
/// and read off the pure-tensor expansion of x.
std::vector<PureTensorTerm> unfuse(const UdotElement& x);

}  // namespace qsl2
