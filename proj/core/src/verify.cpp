#include "qsl2/verify.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "qsl2/bases.hpp"
#include "qsl2/fusion.hpp"
#include "qsl2/tensor_module.hpp"

namespace qsl2 {

SuiteResult& SuiteResult::merge(const SuiteResult& o) {
    cases += o.cases;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    return *this;
}

int env_thread_count() {
    const char* env = std::getenv("QSL2_THREADS");
    if (env == nullptr) return 1;
    int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

namespace {

int pick(int override_value, int fallback) {
    return override_value >= 0 ? override_value : fallback;
}

// Runs fn over all cases, striped across threads, and collects failures in
// case order so the output is deterministic regardless of thread count.
template <class Case>
SuiteResult run_cases(std::string name, const std::vector<Case>& cases,
                      const std::function<std::optional<CaseFailure>(const Case&)>& fn,
                      int threads) {
    SuiteResult result;
    result.name = std::move(name);
    result.cases = static_cast<long>(cases.size());
    if (threads <= 0) threads = env_thread_count();
    std::vector<std::optional<CaseFailure>> slots(cases.size());
    if (threads == 1 || cases.size() <= 1) {
        for (size_t i = 0; i < cases.size(); ++i) slots[i] = fn(cases[i]);
    } else {
        auto worker = [&](size_t start) {
            for (size_t i = start; i < cases.size(); i += static_cast<size_t>(threads))
                slots[i] = fn(cases[i]);
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < threads; ++t) pool.emplace_back(worker, static_cast<size_t>(t));
        worker(0);
        for (auto& th : pool) th.join();
    }
    for (auto& slot : slots)
        if (slot.has_value()) result.failures.push_back(std::move(*slot));
    return result;
}

std::string abm(int a, int b, int m) {
    std::ostringstream os;
    os << "a=" << a << " b=" << b << " m=" << m;
    return os.str();
}

}  // namespace

SuiteResult check_mutual_inverse(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 8), max_b = pick(opt.max_b, 8), max_m = pick(opt.max_m, 12);
    std::vector<std::tuple<int, int, int>> cases;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            for (int m = -max_m; m <= max_m; ++m) cases.emplace_back(a, b, m);
    return run_cases<std::tuple<int, int, int>>(
        "mutual-inverse", cases,
        [](const auto& c) -> std::optional<CaseFailure> {
            const auto [a, b, m] = c;
            auto [c2p, p2c] = ladder_matrices(a, b, m);
            if (!tm_mul(c2p, p2c).is_identity())
                return CaseFailure{abm(a, b, m), "CB->PBW * PBW->CB is not the identity"};
            if (!tm_mul(p2c, c2p).is_identity())
                return CaseFailure{abm(a, b, m), "PBW->CB * CB->PBW is not the identity"};
            return std::nullopt;
        },
        opt.threads);
}

SuiteResult check_three_route_pairing(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 4), max_b = pick(opt.max_b, 4), max_m = pick(opt.max_m, 6);
    struct Case {
        int a, b, a2, b2, m;
    };
    std::vector<Case> cases;
    for (int m = -max_m; m <= max_m; ++m)
        for (int a = 0; a <= max_a; ++a)
            for (int b = 0; b <= max_b; ++b)
                for (int a2 = 0; a2 <= max_a; ++a2)
                    for (int b2 = 0; b2 <= max_b; ++b2) cases.push_back({a, b, a2, b2, m});
    SuiteResult result = run_cases<Case>(
        "three-route-pairing", cases,
        [](const Case& c) -> std::optional<CaseFailure> {
            const UdotElement x = UdotElement::basis(c.a, c.b, c.m);
            const UdotElement y = UdotElement::basis(c.a2, c.b2, c.m);
            const RationalFunction v1 =
                pairing_cb(cb_index(c.a, c.b, c.m), cb_index(c.a2, c.b2, c.m));
            const RationalFunction v2 = pairing_via_pbw(x, y);
            const RationalFunction v3 = pairing_module_limit(x, y);
            std::ostringstream id;
            id << abm(c.a, c.b, c.m) << " a'=" << c.a2 << " b'=" << c.b2;
            if (v1 != v2)
                return CaseFailure{id.str(), "closed form != PBW route: " + v1.str() +
                                                 " vs " + v2.str()};
            if (v1 != v3)
                return CaseFailure{id.str(), "closed form != module limit: " + v1.str() +
                                                 " vs " + v3.str()};
            if (c.b - c.a != c.b2 - c.a2 && !v1.is_zero())
                return CaseFailure{id.str(), "nonzero pairing across b-a != b'-a'"};
            return std::nullopt;
        },
        opt.threads);

    // Spot value from the acceptance list: (EF1_0, EF1_0) = (1+q^-2)/(1-q^-2)^2.
    result.cases += 1;
    LaurentPoly num = LaurentPoly::one();
    num.add_term(-2, Rational(1));
    LaurentPoly den = poch_q2m(1).pow(2);
    const RationalFunction expected(num, den);
    if (pairing_cb(cb_index(1, 1, 0), cb_index(1, 1, 0)) != expected)
        result.failures.push_back(
            {"spot (EF1_0, EF1_0)", "expected (1+q^-2)/(1-q^-2)^2"});

    // Block orthogonality across weights (the delta_{m,m'} part).
    for (int m = -2; m <= 2; ++m)
        for (int m2 = -2; m2 <= 2; ++m2) {
            if (m == m2) continue;
            result.cases += 1;
            if (!pairing(UdotElement::basis(1, 1, m), UdotElement::basis(1, 1, m2)).is_zero())
                result.failures.push_back(
                    {"m=" + std::to_string(m) + " m'=" + std::to_string(m2),
                     "nonzero pairing across weight blocks"});
        }
    return result;
}

SuiteResult check_defining_limit(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 5), max_b = pick(opt.max_b, 5), max_m = pick(opt.max_m, 6);
    std::vector<std::tuple<int, int, int>> cases;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            for (int m = -max_m; m <= max_m; ++m) cases.emplace_back(a, b, m);
    return run_cases<std::tuple<int, int, int>>(
        "defining-limit", cases,
        [](const auto& c) -> std::optional<CaseFailure> {
            const auto [a, b, m] = c;
            Fuser fuser;
            const UdotElement& fused = fuser.fuse(a, b, m);
            if (fused != pbw_to_cb(PBWIndex{a, b, m}))
                return CaseFailure{abm(a, b, m), "fusion recursion != closed-form expansion"};
            const WeightParam wp = WeightParam::symbolic(m);
            TensorVector rem = apply_udot(fused, TensorVector::vacuum(wp));
            rem -= TensorVector::pure_tensor(wp, a, b);
            if (!rem.all_asympt_zero())
                return CaseFailure{abm(a, b, m),
                                   "remainder is not asymptotically zero: " + rem.str()};
            return std::nullopt;
        },
        opt.threads);
}

SuiteResult check_round_trip(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 5), max_b = pick(opt.max_b, 5), max_m = pick(opt.max_m, 6);
    std::vector<std::tuple<int, int, int>> cases;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            for (int m = -max_m; m <= max_m; ++m) cases.emplace_back(a, b, m);
    return run_cases<std::tuple<int, int, int>>(
        "round-trip", cases,
        [](const auto& c) -> std::optional<CaseFailure> {
            const auto [a, b, m] = c;
            Fuser fuser;
            auto terms = unfuse(fuser.fuse(a, b, m));
            if (terms.size() != 1 || terms[0].a != a || terms[0].b != b ||
                !terms[0].coeff.is_one())
                return CaseFailure{abm(a, b, m), "unfuse(fuse) != {(a,b): 1}"};
            return std::nullopt;
        },
        opt.threads);
}

SuiteResult check_pbw_orthogonality_module(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 4), max_b = pick(opt.max_b, 4), max_m = pick(opt.max_m, 4);
    struct Case {
        int a, b, a2, b2, m;
    };
    std::vector<Case> cases;
    for (int m = -max_m; m <= max_m; ++m)
        for (int a = 0; a <= max_a; ++a)
            for (int b = 0; b <= max_b; ++b)
                for (int a2 = 0; a2 <= max_a; ++a2)
                    for (int b2 = 0; b2 <= max_b; ++b2) cases.push_back({a, b, a2, b2, m});
    SuiteResult result = run_cases<Case>(
        "pbw-orthogonality", cases,
        [](const Case& c) -> std::optional<CaseFailure> {
            const UdotElement wx = pbw_to_cb(PBWIndex{c.a, c.b, c.m});
            const UdotElement wy = pbw_to_cb(PBWIndex{c.a2, c.b2, c.m});
            const RationalFunction got = pairing_module_limit(wx, wy);
            const RationalFunction expected =
                pairing_pbw(PBWIndex{c.a, c.b, c.m}, PBWIndex{c.a2, c.b2, c.m});
            if (got != expected) {
                std::ostringstream id;
                id << abm(c.a, c.b, c.m) << " a'=" << c.a2 << " b'=" << c.b2;
                return CaseFailure{id.str(),
                                   "module-limit norm " + got.str() + " != " + expected.str()};
            }
            return std::nullopt;
        },
        opt.threads);

    // delta_{m,m'}: distinct blocks pair to zero (block orthogonality).
    for (int m = -2; m <= 2; ++m)
        for (int m2 = -2; m2 <= 2; ++m2) {
            if (m == m2) continue;
            result.cases += 1;
            const UdotElement wx = pbw_to_cb(PBWIndex{1, 1, m});
            const UdotElement wy = pbw_to_cb(PBWIndex{1, 1, m2});
            if (!pairing(wx, wy).is_zero() || !pairing_via_pbw(wx, wy).is_zero())
                result.failures.push_back(
                    {"m=" + std::to_string(m) + " m'=" + std::to_string(m2),
                     "w-basis elements from distinct blocks are not orthogonal"});
        }
    return result;
}

SuiteResult check_closed_actions(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 4), max_b = pick(opt.max_b, 4), max_m = pick(opt.max_m, 4);
    std::vector<std::tuple<int, int, int>> cases;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            for (int m = -max_m; m <= max_m; ++m) cases.emplace_back(a, b, m);
    return run_cases<std::tuple<int, int, int>>(
        "closed-actions", cases,
        [](const auto& c) -> std::optional<CaseFailure> {
            const auto [a, b, m] = c;
            const WeightParam sym = WeightParam::symbolic(m);
            const TensorVector vac = TensorVector::vacuum(sym);
            const TensorVector ef = closed_action_EF(a, b, vac);
            const TensorVector fe = closed_action_FE(a, b, vac);
            if (ef != act_divpow(Gen::E, a, act_divpow(Gen::F, b, vac)))
                return CaseFailure{abm(a, b, m), "closed EF sum != iterated action"};
            if (fe != act_divpow(Gen::F, b, act_divpow(Gen::E, a, vac)))
                return CaseFailure{abm(a, b, m), "closed FE sum != iterated action"};
            for (int p = 6; p <= 12; ++p) {
                const WeightParam conc = WeightParam::concrete(p, m);
                const TensorVector cvac = TensorVector::vacuum(conc);
                TensorVector expected_ef(conc);
                for (const auto& [ab, coeff] : ef.terms())
                    expected_ef.add_term(ab.first, ab.second, coeff);  // substitutes u = q^{-p}
                if (expected_ef != closed_action_EF(a, b, cvac) ||
                    expected_ef != act_divpow(Gen::E, a, act_divpow(Gen::F, b, cvac)))
                    return CaseFailure{abm(a, b, m) + " p=" + std::to_string(p),
                                       "concrete EF action disagrees with u = q^{-p}"};
                TensorVector expected_fe(conc);
                for (const auto& [ab, coeff] : fe.terms())
                    expected_fe.add_term(ab.first, ab.second, coeff);
                if (expected_fe != closed_action_FE(a, b, cvac) ||
                    expected_fe != act_divpow(Gen::F, b, act_divpow(Gen::E, a, cvac)))
                    return CaseFailure{abm(a, b, m) + " p=" + std::to_string(p),
                                       "concrete FE action disagrees with u = q^{-p}"};
            }
            return std::nullopt;
        },
        opt.threads);
}

SuiteResult check_positivity(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 6), max_b = pick(opt.max_b, 6), max_m = pick(opt.max_m, 8);
    const int order = pick(opt.order, kDefaultSeriesOrder);
    std::vector<std::tuple<int, int, int>> cases;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            for (int m = -max_m; m <= max_m; ++m) cases.emplace_back(a, b, m);
    return run_cases<std::tuple<int, int, int>>(
        "positivity", cases,
        [order](const auto& c) -> std::optional<CaseFailure> {
            const auto [a, b, m] = c;
            PositivityReport report = positivity_report(cb_index(a, b, m), order);
            if (!report.pass)
                return CaseFailure{abm(a, b, m), "positivity report failed"};
            return std::nullopt;
        },
        opt.threads);
}

SuiteResult check_qbinom_identity(const VerifyOptions& opt) {
    const int kmax = pick(opt.max_m, 20);
    SuiteResult result;
    result.name = "qbinom-identity";
    for (int k = 1; k <= kmax; ++k) {
        result.cases += 1;
        LaurentPoly sum;
        for (int s = 0; s <= k; ++s) {
            LaurentPoly term = gaussian_binomial(k, s);
            term.mul_q_power(s * (1 - k));
            if (s % 2 != 0) term = -term;
            sum += term;
        }
        if (!sum.is_zero())
            result.failures.push_back({"k=" + std::to_string(k), "sum = " + sum.str()});
    }
    return result;
}

SuiteResult check_homomorphism_gate(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 4), max_b = pick(opt.max_b, 4), max_m = pick(opt.max_m, 4);
    std::vector<std::tuple<int, int, int>> cases;
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b)
            for (int m = -max_m; m <= max_m; ++m) cases.emplace_back(a, b, m);
    return run_cases<std::tuple<int, int, int>>(
        "homomorphism", cases,
        [](const auto& c) -> std::optional<CaseFailure> {
            const auto [a, b, m] = c;
            const UdotElement x = UdotElement::basis(a, b, m);
            for (Gen g : {Gen::E, Gen::F}) {
                const UdotElement gx = mul_gen(g, x);
                for (int p = 6; p <= 12; ++p) {
                    const TensorVector vac =
                        TensorVector::vacuum(WeightParam::concrete(p, m));
                    const TensorVector lhs = apply_udot(gx, vac);
                    const TensorVector rhs =
                        act_gen(g == Gen::E ? GenK::E : GenK::F, apply_udot(x, vac));
                    if (lhs != rhs)
                        return CaseFailure{abm(a, b, m) + " p=" + std::to_string(p) +
                                               (g == Gen::E ? " g=E" : " g=F"),
                                           "mul_gen disagrees with the module action"};
                }
            }
            return std::nullopt;
        },
        opt.threads);
}

SuiteResult check_wall_consistency(const VerifyOptions& opt) {
    const int max_a = pick(opt.max_a, 6), max_b = pick(opt.max_b, 6);
    SuiteResult result;
    result.name = "wall-consistency";
    for (int a = 0; a <= max_a; ++a)
        for (int b = 0; b <= max_b; ++b) {
            result.cases += 1;
            const int m = b - a;
            if (detail::cb_to_pbw_ef(a, b, m) != detail::cb_to_pbw_fe(a, b, m))
                result.failures.push_back({abm(a, b, m), "CB->PBW branches differ on the wall"});
            if (detail::pbw_to_cb_ef(a, b, m) != detail::pbw_to_cb_fe(a, b, m))
                result.failures.push_back({abm(a, b, m), "PBW->CB branches differ on the wall"});
        }
    return result;
}

std::vector<std::string> suite_names() {
    return {"inverse", "orthogonality", "limits", "positivity", "homomorphism",
            "qbinom-identity"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    SuiteResult result;
    result.name = name;
    if (name == "inverse") {
        result.merge(check_mutual_inverse(opt)).merge(check_wall_consistency(opt));
    } else if (name == "orthogonality") {
        result.merge(check_three_route_pairing(opt)).merge(check_pbw_orthogonality_module(opt));
    } else if (name == "limits") {
        result.merge(check_defining_limit(opt)).merge(check_round_trip(opt));
    } else if (name == "positivity") {
        result.merge(check_positivity(opt));
    } else if (name == "homomorphism") {
        result.merge(check_homomorphism_gate(opt)).merge(check_closed_actions(opt));
    } else if (name == "qbinom-identity") {
        result.merge(check_qbinom_identity(opt));
    } else {
        throw Error("unknown verify suite: " + name);
    }
    return result;
}

}  // namespace qsl2
