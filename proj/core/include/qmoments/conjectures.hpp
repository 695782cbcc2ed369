#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmoments/moments.hpp"
#include "qmoments/report.hpp"

namespace qmoments {

/// m-fold application of the q-difference operator in t,
/// f -> (f(t) - f(qt)) / ((1-q) t). On monomials, t^k -> [k] t^(k-1).
RatFunc q_diff_t(const RatFunc& f, int iterations = 1);

/// Polynomial version; the division by (1-q)t must clear exactly and is
/// asserted on every application.
Poly q_diff_t(const Poly& f, int iterations = 1);

/// The coefficient family c_n(t,m,q): zero for n < 0, one for n = 0, and
/// otherwise the [m]/[n+m]-weighted double-binomial sum. The weight is
/// asserted to clear after summation.
Poly c_nm(int n, int m);

enum class ConjectureId { c3_45, c3_47, c3_48, c3_49, c3_50, c3_51, gf_q1 };

struct ConjectureCase {
    ConjectureId id;
    int n = 0;
    int m = 1;
};

std::string conjecture_id_name(ConjectureId id);
std::optional<ConjectureId> conjecture_id_from_name(const std::string& name);
const std::vector<ConjectureId>& all_conjecture_ids();

/// Evaluates both sides of one conjectural identity exactly and reports
/// pass/fail with the difference on a mismatch. Never asserts.
VerificationReport check_conjecture(const ConjectureCase& c);

/// Coefficients of the truncated power series C(x,t)^m, where C(x,t) is
/// the generating function of the Narayana polynomials, by exact
/// convolution up to order N.
std::vector<Poly> narayana_gf_power(int m, int N);

/// Compares c_n(t,m,1) with the x^n coefficient of C(x,t)^m, under both
/// candidate upper limits of the defining sum; the report's note states
/// which truncation matches.
VerificationReport gf_power_check(int m, int N);

} // namespace qmoments
