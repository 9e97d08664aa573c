#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qpb {

/// Outcome of one named invariant check.
struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail; // first counterexample; empty on success
};

/// A single runnable law check. `run` returns pass/fail plus a detail
/// message describing the first counterexample found.
struct Check {
    std::string name;
    std::function<std::pair<bool, std::string>()> run;
};

struct VerifySuite {
    std::string name;
    std::vector<Check> checks;
};

/// The registry of invariant suites, keyed by library area:
/// calculus, hopf, bundle, qvb, gauge, field.
const std::vector<VerifySuite>& verify_suites();

/// Run one suite by name; "all" runs every suite in registry order.
/// Unknown names raise DomainError. Exceptions thrown by a check are
/// captured as failures rather than propagated.
std::vector<CheckResult> run_suite(const std::string& name);

/// One row of the replication ledger: a documented value next to the
/// value the library computes for it.
struct ReplicationRow {
    std::string claim;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Recompute every documented anchor value and report it side by side
/// with the stored form. All comparisons are exact.
std::vector<ReplicationRow> replication_report();

} // namespace qpb
