#pragma once

#include <string>
#include <vector>

#include "qsl2/qseries.hpp"

namespace qsl2 {

/// Range overrides for the verification sweeps; -1 means "use the suite's
/// default", which mirrors the shipped acceptance ranges. threads = 0 reads
/// QSL2_THREADS from the environment (default 1).
struct VerifyOptions {
    int max_a = -1;
    int max_b = -1;
    int max_m = -1;
    int order = -1;
    int threads = 0;
};

struct CaseFailure {
    std::string case_id;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    long cases = 0;
    std::vector<CaseFailure> failures;

    bool pass() const { return failures.empty(); }
    SuiteResult& merge(const SuiteResult& o);
};

// One check per acceptance criterion. Default ranges are the pinned
// acceptance ranges; every comparison is exact.
SuiteResult check_mutual_inverse(const VerifyOptions& opt = {});        // a,b<=8, |m|<=12
SuiteResult check_three_route_pairing(const VerifyOptions& opt = {});   // a,b,a',b'<=4, |m|<=6
SuiteResult check_defining_limit(const VerifyOptions& opt = {});        // a,b<=5, |m|<=6
SuiteResult check_round_trip(const VerifyOptions& opt = {});            // a,b<=5, |m|<=6
SuiteResult check_pbw_orthogonality_module(const VerifyOptions& opt = {});  // a,b<=4
SuiteResult check_closed_actions(const VerifyOptions& opt = {});        // a,b<=4, |m|<=4, p=6..12
SuiteResult check_positivity(const VerifyOptions& opt = {});            // a,b<=6, |m|<=8, order 30
SuiteResult check_qbinom_identity(const VerifyOptions& opt = {});       // 1<=k<=20 (max_m as k cap)
SuiteResult check_homomorphism_gate(const VerifyOptions& opt = {});     // a,b<=4, |m|<=4, p=6..12
SuiteResult check_wall_consistency(const VerifyOptions& opt = {});      // a,b<=6 on m=b-a

/// Named suites exposed by the CLI `verify` subcommand.
///   inverse         -> mutual inverse + wall consistency
///   orthogonality   -> three-route pairing + PBW norms via the module limit
///   limits          -> defining limit + round trip
///   positivity      -> positivity sweep
///   homomorphism    -> module-action gate + closed-vs-iterated actions
///   qbinom-identity -> the q-binomial identity
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {});

/// Thread count from QSL2_THREADS (>=1); 1 when unset or unparsable.
int env_thread_count();

}  // namespace qsl2
