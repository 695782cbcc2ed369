#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace qmoments {

/// Deliberate defects for the negative-control checks; `none` everywhere
/// in production paths.
enum class Mutation {
    none,
    /// Drops the q^(n+2k+1) factor from the third term of the
    /// Catalan-Stieltjes row recurrence.
    stieltjes_drop_q_factor,
    /// Uses q^(2k+1) instead of q^(2k+2) in the B/D column relation.
    bd_wrong_q_power,
    /// Uses the exponent binom(j,2) instead of binom(j+1,2) in the
    /// alternating unit sum c(n,k).
    carlitz_wrong_exponent,
};

struct Counterexample {
    std::string where;       // e.g. "n=3, k=1"
    std::string lhs;
    std::string rhs;
    std::string difference;  // lhs - rhs, possibly truncated
};

/// Outcome of one identity or conjecture check over a finite range.
struct VerificationReport {
    std::string id;
    std::string title;
    std::string range;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    double seconds = 0.0;
    std::string note;

    void fail(Counterexample ce) {
        if (pass) {
            pass = false;
            counterexample = std::move(ce);
        }
    }
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["range"] = r.range;
    j["pass"] = r.pass;
    if (r.counterexample) {
        nlohmann::ordered_json c;
        c["where"] = r.counterexample->where;
        c["lhs"] = r.counterexample->lhs;
        c["rhs"] = r.counterexample->rhs;
        c["difference"] = r.counterexample->difference;
        j["counterexample"] = c;
    }
    if (!r.note.empty()) j["note"] = r.note;
    j["seconds"] = r.seconds;
    return j;
}

} // namespace qmoments
