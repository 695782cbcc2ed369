#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmoments/report.hpp"

namespace qmoments {

/// Per-group index bounds of the proven-identity suite. The defaults are
/// the widest ranges asserted by the module invariants; acceptance() pins
/// the exact ranges of the acceptance gate.
struct VerifyBounds {
    int carlitz = 12;     // unit-sum, x^n expansions in the q-families, the L/F relation
    int rec4 = 12;        // four-term recursion
    int rec_sqrt = 10;    // square-root recursion in the substituted ring
    int pqrs = 8;         // split families and their x^n reconstructions
    int inversion = 10;   // inversion lemma round-trips
    int r_closed = 10;    // recurrence vs closed form for the split R family
    int thm1 = 6;         // F(x,t,q) suite
    int thm2 = 6;         // L(x,t,q) suite
    int tables = 6;       // the A/B/D/E table identities

    static VerifyBounds defaults() { return {}; }
    static VerifyBounds acceptance() {
        VerifyBounds b;
        b.rec4 = 10;
        b.pqrs = 6;
        return b;
    }
    /// Uniform override used by the CLI --N flag.
    void set_all(int n) {
        carlitz = rec4 = rec_sqrt = pqrs = inversion = r_closed = thm1 = thm2 = tables = n;
    }
};

struct IdentityCheck {
    std::string id;
    std::string title;
    std::function<VerificationReport(const VerifyBounds&, Mutation)> run;
};

/// The ordered catalog of proven-identity checks.
const std::vector<IdentityCheck>& identity_suite();

/// Runs the catalog (or the subset named in `only`) at the given bounds,
/// optionally with `jobs` worker threads. Output order is the catalog
/// order regardless of the parallelism degree.
std::vector<VerificationReport> run_identity_suite(const VerifyBounds& bounds,
                                                   const std::vector<std::string>& only = {},
                                                   int jobs = 1,
                                                   Mutation mutation = Mutation::none);

/// Maps the CLI mutation names (negative controls) to the enum.
Mutation mutation_from_name(const std::string& name);
const std::vector<std::string>& mutation_names();

} // namespace qmoments
