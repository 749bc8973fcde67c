// qsl2 -- exact canonical/PBW basis computations for the modified quantum sl2.
//
// Subcommands:
//   expand-cb   canonical basis element in the PBW basis
//   expand-pbw  PBW basis element in the canonical basis
//   fuse        fusion product w_m(a,b) plus its defining-limit remainder
//   pair        bilinear pairing by one or all of the three routes
//   verify      named exact verification sweeps
//   table       transition matrices, pairing grids, positivity reports

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qsl2/bases.hpp"
#include "qsl2/fusion.hpp"
#include "qsl2/json_io.hpp"
#include "qsl2/tensor_module.hpp"
#include "qsl2/verify.hpp"

namespace {

using namespace qsl2;

std::string fail_json(const std::string& where, const std::string& case_id,
                      const std::string& detail) {
    std::ostringstream os;
    os << "FAIL {\"command\":\"" << where << "\",\"case\":\"" << case_id << "\",\"detail\":\""
       << detail << "\"}";
    return os.str();
}

std::string pbw_combo_csv(const PBWCombo& x) {
    std::ostringstream os;
    os << "a,b,coeff\n";
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        os << it->first.first << "," << it->first.second << "," << it->second.str() << "\n";
    return os.str();
}

std::string udot_csv(const UdotElement& x) {
    std::ostringstream os;
    os << "a,b,orient,coeff\n";
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        CBIndex i = cb_index(it->first.first, it->first.second, x.weight());
        os << i.a << "," << i.b << "," << (i.orient == Orient::EF ? "EF" : "FE") << ","
           << it->second.str() << "\n";
    }
    return os.str();
}

int run_expand_cb(int a, int b, int m, const std::string& format) {
    PBWCombo combo = cb_to_pbw(cb_index(a, b, m));
    if (format == "json")
        std::cout << pbw_combo_to_json(combo) << "\n";
    else if (format == "csv")
        std::cout << pbw_combo_csv(combo);
    else
        std::cout << cb_index(a, b, m).str() << " = " << combo.str() << "\n";
    return 0;
}

int run_expand_pbw(int a, int b, int m, const std::string& format) {
    UdotElement x = pbw_to_cb(PBWIndex{a, b, m});
    if (format == "json")
        std::cout << udot_to_json(x) << "\n";
    else if (format == "csv")
        std::cout << udot_csv(x);
    else
        std::cout << PBWIndex{a, b, m}.str() << " = " << x.str() << "\n";
    return 0;
}

int run_fuse(int a, int b, int m, const std::string& format) {
    FusionResult result = fuse(a, b, m);
    TensorVector rem = defining_limit_remainder(a, b, m);
    const bool ok = rem.all_asympt_zero();
    if (format == "json") {
        std::cout << "{\"value\":" << udot_to_json(result.value)
                  << ",\"remainder\":" << tensor_to_json(rem)
                  << ",\"asymptotically_zero\":" << (ok ? "true" : "false") << "}\n";
    } else if (format == "csv") {
        std::cout << udot_csv(result.value);
    } else {
        std::cout << PBWIndex{a, b, m}.str() << " = " << result.value.str() << "\n";
        std::cout << "defining-limit remainder: " << rem.str() << "\n";
        std::cout << "asymptotically zero: " << (ok ? "yes" : "no") << "\n";
    }
    if (!ok) {
        std::cout << fail_json("fuse", PBWIndex{a, b, m}.str(),
                               "defining-limit remainder is not asymptotically zero")
                  << "\n";
        return 1;
    }
    return 0;
}

int run_pair(int a, int b, int m, int a2, int b2, int m2, const std::string& route,
             const std::string& format) {
    const UdotElement x = UdotElement::basis(a, b, m);
    const UdotElement y = UdotElement::basis(a2, b2, m2);
    std::ostringstream case_id;
    case_id << "(" << a << "," << b << "," << m << ")x(" << a2 << "," << b2 << "," << m2 << ")";

    auto module_route = [&]() {
        // Distinct blocks pair to zero before any module computation.
        return m == m2 ? pairing_module_limit(x, y) : RationalFunction();
    };

    RationalFunction value;
    if (route == "cb") {
        value = pairing(x, y);
    } else if (route == "pbw") {
        value = pairing_via_pbw(x, y);
    } else if (route == "module-limit") {
        value = module_route();
    } else {  // all
        const RationalFunction v1 = pairing(x, y);
        const RationalFunction v2 = pairing_via_pbw(x, y);
        const RationalFunction v3 = module_route();
        if (v1 != v2 || v1 != v3) {
            std::cout << fail_json("pair", case_id.str(),
                                   "routes disagree: cb=" + v1.str() + " pbw=" + v2.str() +
                                       " module-limit=" + v3.str())
                      << "\n";
            return 1;
        }
        value = v1;
    }
    if (format == "json")
        std::cout << ratfun_to_json(value) << "\n";
    else
        std::cout << value.str() << "\n";
    return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& opt) {
    std::vector<std::string> names =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    bool ok = true;
    for (const auto& name : names) {
        SuiteResult result = run_suite(name, opt);
        std::cout << (result.pass() ? "PASS " : "FAIL ") << name << " (" << result.cases
                  << " cases)";
        if (!result.pass()) {
            ok = false;
            std::cout << "\n"
                      << fail_json("verify " + name, result.failures.front().case_id,
                                   result.failures.front().detail);
        }
        std::cout << "\n";
    }
    return ok ? 0 : 1;
}

int run_table(const std::string& kind, int a, int b, int m, int max_a, int max_b, int order,
              const std::string& format) {
    if (kind == "transition") {
        auto [c2p, p2c] = ladder_matrices(a, b, m);
        if (format == "json") {
            std::cout << "{\"cb_to_pbw\":" << transition_matrix_to_json(c2p)
                      << ",\"pbw_to_cb\":" << transition_matrix_to_json(p2c) << "}\n";
        } else if (format == "csv") {
            std::cout << "# CB->PBW\n" << transition_matrix_to_csv(c2p);
            std::cout << "# PBW->CB\n" << transition_matrix_to_csv(p2c);
        } else {
            std::cout << "CB->PBW over ladder of " << cb_index(a, b, m).str() << ":\n"
                      << transition_matrix_to_csv(c2p);
            std::cout << "PBW->CB:\n" << transition_matrix_to_csv(p2c);
        }
        return 0;
    }
    if (kind == "pairing") {
        std::vector<std::pair<int, int>> labels;
        for (int i = 0; i <= max_a; ++i)
            for (int j = 0; j <= max_b; ++j) labels.emplace_back(i, j);
        std::ostringstream os;
        os << "a,b";
        for (const auto& [i, j] : labels) os << ",(" << i << ";" << j << ")";
        os << "\n";
        for (const auto& [i, j] : labels) {
            os << i << "," << j;
            for (const auto& [i2, j2] : labels)
                os << "," << pairing_cb(cb_index(i, j, m), cb_index(i2, j2, m)).str();
            os << "\n";
        }
        std::cout << os.str();
        return 0;
    }
    if (kind == "positivity") {
        PositivityReport report = positivity_report(cb_index(a, b, m), order);
        if (format == "json")
            std::cout << positivity_report_to_json(report) << "\n";
        else
            std::cout << positivity_report_to_csv(report);
        return report.pass ? 0 : 1;
    }
    std::cout << fail_json("table", kind, "unknown table kind") << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact canonical/PBW basis computations for the modified quantum sl2"};
    app.require_subcommand(1);

    int a = 0, b = 0, m = 0, a2 = 0, b2 = 0, m2 = 0;
    int order = kDefaultSeriesOrder;
    std::string format = "text";
    std::string route = "all";

    auto add_abm = [&](CLI::App* cmd, bool need_second) {
        cmd->add_option("--a", a, "E divided power")->required();
        cmd->add_option("--b", b, "F divided power")->required();
        cmd->add_option("--m", m, "weight (the block 1_m)")->required();
        if (need_second) {
            cmd->add_option("--a2", a2)->required();
            cmd->add_option("--b2", b2)->required();
            cmd->add_option("--m2", m2)->required();
        }
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* expand_cb = app.add_subcommand("expand-cb", "canonical basis -> PBW basis");
    add_abm(expand_cb, false);

    CLI::App* expand_pbw = app.add_subcommand("expand-pbw", "PBW basis -> canonical basis");
    add_abm(expand_pbw, false);

    CLI::App* fuse_cmd = app.add_subcommand("fuse", "fusion product and its limit remainder");
    add_abm(fuse_cmd, false);

    CLI::App* pair_cmd = app.add_subcommand("pair", "bilinear pairing of two basis elements");
    add_abm(pair_cmd, true);
    pair_cmd->add_option("--route", route)
        ->check(CLI::IsMember({"cb", "pbw", "module-limit", "all"}));

    VerifyOptions vopt;
    std::string suite;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a named verification sweep");
    verify_cmd->add_option("suite", suite, "inverse|orthogonality|limits|positivity|homomorphism|qbinom-identity|all")
        ->required();
    verify_cmd->add_option("--max-a", vopt.max_a);
    verify_cmd->add_option("--max-b", vopt.max_b);
    verify_cmd->add_option("--max-m", vopt.max_m);
    verify_cmd->add_option("--order", vopt.order);

    std::string table_kind;
    int max_a = 3, max_b = 3;
    CLI::App* table_cmd = app.add_subcommand("table", "emit matrices/grids/reports");
    table_cmd->add_option("kind", table_kind, "transition|pairing|positivity")->required();
    table_cmd->add_option("--a", a);
    table_cmd->add_option("--b", b);
    table_cmd->add_option("--m", m)->required();
    table_cmd->add_option("--max-a", max_a);
    table_cmd->add_option("--max-b", max_b);
    table_cmd->add_option("--order", order);
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand_cb->parsed()) return run_expand_cb(a, b, m, format);
        if (expand_pbw->parsed()) return run_expand_pbw(a, b, m, format);
        if (fuse_cmd->parsed()) return run_fuse(a, b, m, format);
        if (pair_cmd->parsed()) return run_pair(a, b, m, a2, b2, m2, route, format);
        if (verify_cmd->parsed()) return run_verify(suite, vopt);
        if (table_cmd->parsed())
            return run_table(table_kind, a, b, m, max_a, max_b, order, format);
    } catch (const Error& e) {
        std::cout << fail_json("qsl2", "exception", e.what()) << "\n";
        return 1;
    }
    return 0;
}
