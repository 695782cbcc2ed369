#pragma once

#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "qmoments/poly.hpp"

namespace qmoments {

/// [n] = 1 + q + ... + q^(n-1), with [0] = 0.
Poly q_int(int n);

/// [n]! = [1][2]...[n].
Poly q_factorial(int n);

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n).
Poly q_pochhammer(int n);

/// Memoized Gaussian binomials, built by the q-Pascal recurrence
/// [n,k] = [n-1,k-1] + q^k [n-1,k]. Safe under concurrent lookup.
///
/// Conventions: [n,k] = 0 for k < 0 or k > n >= 0; [m,0] = 1 for every
/// integer m (empty product), which the closed-form sums rely on at
/// their k = n boundary. A negative top with k > 0 is not supported.
class QBinomTable {
public:
    Poly get(int n, int k);

private:
    std::mutex mu_;
    std::vector<std::vector<Poly>> rows_;
};

/// Shared table.
Poly q_binom(int n, int k);

/// The alternating unit sum: sum over j of
/// (-1)^j q^binom(j+1,2) [k,j][n-j,k], equal to 1 for 0 <= k <= n.
Poly carlitz_c(int n, int k);

/// Both double sums from the t=1 collapse of the even/odd closed forms:
/// first:  sum_j [n-j,k-j][n-k+j-1,j] q^((n-k+1)j)   (equals [2n-k,k])
/// second: sum_j [n-j,k-j][n-k+j,j]   q^((n-k+1)j)   (equals [2n+1-k,k])
std::pair<Poly, Poly> vandermonde_sums(int n, int k);

enum class InvDirection { forward, backward };

/// Carlitz pair of triangular transforms on finite sequences.
/// forward  (v -> u): u(n) = sum_k (1/q^k)([n,k] - [n,k-1]) v(n-2k)
/// backward (u -> v): v(n) = sum_j (-1)^j q^binom(j,2) [n-j,j] u(n-2j)
/// The two compose to the identity in either order.
std::vector<Poly> carlitz_inversion(std::span<const Poly> seq, InvDirection direction);

} // namespace qmoments
