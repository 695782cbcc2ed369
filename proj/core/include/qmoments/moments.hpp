#pragma once

#include <string>
#include <vector>

#include "qmoments/families.hpp"
#include "qmoments/report.hpp"

namespace qmoments {

/// Lower-triangular array a(n,k), 0 <= k <= n <= limit(). Out-of-triangle
/// lookups return 0.
class TriangularTable {
public:
    TriangularTable(std::string name, int limit);

    const std::string& name() const { return name_; }
    int limit() const { return limit_; }

    const RatFunc& at(int n, int k) const;
    void set(int n, int k, RatFunc v);

private:
    std::string name_;
    int limit_;
    std::vector<std::vector<RatFunc>> rows_;
};

/// Coefficients a(n,k) of x^n = sum_k a(n,k) p_k(x) for a monic family,
/// by back-substitution from the top degree down. Unconditionally exact;
/// the reconstruction is re-verified before returning.
/// Throws std::domain_error on a non-monic family member.
TriangularTable expand_in_family(const PolyFamily& fam, int N);

/// Closed form in the parameters of the identity a(2n+k, k) =
/// [k+1]/[n+k+1] [2n+k, n]; clears to a polynomial (asserted).
Poly a_qfib_closed(int n, int k);
/// The same data addressed by table position (row, col); 0 off-parity.
RatFunc a_qfib_entry(int row, int col);
/// The other printed form (1/q^n)([2n+k,n] - [2n+k,n-1]).
RatFunc a_qfib_alt(int n, int k);

/// Table entries of the x^n expansion in F(x,t,q), by table position;
/// even rows/cols and odd rows/cols carry the two closed-form sums,
/// everything else is 0.
RatFunc a_fibtq_closed(int row, int col);

enum class TableKind { A, B, D, E };

/// Literal evaluation of the four (t,q) coefficient tables. A and B carry
/// a 1/q^(n-k) prefactor, E a 1/(1+t^(k+1)) prefactor; D is polynomial.
RatFunc table_ABDE(TableKind kind, int n, int k);

/// B in its [k+1]/[n+1]-weighted single-sum form.
RatFunc b_alt(int n, int k);
/// E in its split two-sum form.
RatFunc e_alt(int n, int k);

enum class MomentKind { narayana, q_narayana, q_catalan, central_qbinom, typeB_M, L1_odd, M1_odd };

RatFunc moment(MomentKind kind, int n);

MomentKind moment_kind_from_name(const std::string& name);
const std::vector<std::string>& moment_kind_names();

/// Checks the Catalan-Stieltjes style row recurrences of the D table:
/// column 0 against D_{n,0} = (1+q^n t) D_{n-1,0}(qt) + q(1+q^n) t D_{n-1,1}(qt)
/// and interior columns against the three-term form with the q^(n+2k+1) t
/// weight. The mutation drops that weight (negative control).
VerificationReport catalan_stieltjes_check(int N, Mutation mutation = Mutation::none);

/// Checks B_{n,k} = D_{n,k} - q^(2k+2) t D_{n,k+2} together with the
/// equivalent Gaussian-binomial bracket identity. The mutation replaces
/// q^(2k+2) by q^(2k+1) (negative control).
VerificationReport b_d_relation_check(int N, Mutation mutation = Mutation::none);

} // namespace qmoments
