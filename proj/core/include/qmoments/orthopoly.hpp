#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmoments/detexact.hpp"
#include "qmoments/families.hpp"

namespace qmoments {

/// A linear functional given through its moment values L(x^n).
/// value(0) = 1 for every registered sequence.
struct MomentSequence {
    std::string name;
    std::function<RatFunc(int)> value;
};

/// Named sequences:
///   qcatalan_full / qnarayana_full / central_full / typeB_full
///     moments with interleaved zeros at odd powers, dual to the
///     qfib / fib_tq / qlucas / lucas_tq families;
///   L0, L1, M0q, M1q       the x-moments dual to P, Q, R, S;
///   A0, B0, D0, E0         the (t,q) x-moments dual to P_tq..S_tq.
const MomentSequence& moment_sequence(const std::string& name);
const std::vector<std::string>& moment_sequence_names();

Matrix hankel_matrix(const MomentSequence& m, int n);

/// det(a_{i+j}) for i,j = 0..n.
RatFunc hankel_det(const MomentSequence& m, int n);

/// Monic orthogonal polynomials p_0..p_N by exact Gram-Schmidt on the
/// monomials under (f,g) -> L(fg). Orthogonality is re-verified against
/// the previous member as the construction proceeds. Throws
/// std::domain_error naming the index when a squared norm (equivalently
/// a Hankel determinant) vanishes.
std::vector<RatFunc> orthogonal_polys(const MomentSequence& m, int N);

/// L(p) = sum_k coeff_k L(x^k). The denominator of p must be x-free.
RatFunc functional_apply(const MomentSequence& m, const RatFunc& p);

/// Wraps the Gram-Schmidt output (precomputed up to N) as an expandable
/// family named "orth_<sequence>".
PolyFamily orthogonal_family(const MomentSequence& m, int N);

} // namespace qmoments
