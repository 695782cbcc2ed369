#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmoments/ratfunc.hpp"

namespace qmoments {

/// Classical Fibonacci polynomials F_n(x): alternating sum of
/// binom(n-k,k) x^(n-2k).
Poly fib(int n);

/// Generalized F_n(x,t), built from the even/odd pair of recurrences
/// F_{2n} = x F_{2n-1} - F_{2n-2}, F_{2n+1} = x F_{2n} - t F_{2n-1}.
Poly fib_t(int n);
/// The same family from its double-sum closed form.
Poly fib_t_closed(int n);

/// q-Fibonacci F_n(x,q): sum of (-1)^j q^binom(j,2) [n-j,j] x^(n-2j).
Poly qfib(int n);

/// q-Lucas L_n(x,q) with the [n]/[n-k] weight; the weight must clear to
/// a polynomial, asserted termwise.
Poly qlucas(int n);

enum class PQRS { P, Q, R, S };

/// The even/odd split families of the q-Fibonacci and q-Lucas
/// polynomials, defined by their closed-form sums (never by a sqrt(x)
/// substitution).
Poly pqrs(PQRS kind, int n);

/// F_n(x,t,q) by the twisted recurrence
/// F_n = x F_{n-1}(x,qt,q) - q^floor((n-1)/2) tau_{n-2}(t) F_{n-2}(x,t,q).
Poly fib_tq(int n);
/// The same family from the closed-form double sums.
Poly fib_tq_closed(int n);

/// tau_n(t) for the F recurrence: 1 for even n, t for odd n.
Poly tau_fib(int n);

/// tau_n(t,q) for the L recurrence: 1+qt at n = 0, then
/// q^m (1 + q^(m+1) t^(m+1)) / (1 + q^m t^m) at n = 2m and
/// q^(m+1) t (1 + t^m) / (1 + t^(m+1)) at n = 2m+1.
RatFunc tau_lucas(int n);
/// The q = 1 specialization of tau_lucas.
RatFunc tau_lucas_t(int n);

/// L_n(x,t,q) by L_n = x L_{n-1}(x,qt,q) - tau_{n-2}(t,q) L_{n-2}(x,t,q).
///
/// Returned as RatFunc: the odd-index members have genuine denominators
/// in t (already tau_1 = 2qt/(1+t) puts one into L_3); even members
/// clear to polynomials and do so under an as_poly assertion elsewhere.
RatFunc lucas_tq(int n);

/// Type-B L_n(x,t), i.e. lucas_tq at q = 1, built independently from its
/// own recurrence as a reduction oracle.
RatFunc lucas_t(int n);

/// The (t,q) split families. Q from its closed double sum, P likewise,
/// R from R_n = Q_n - q^(2n-2) t Q_{n-2} (values are polynomials),
/// S from S_n = ((1+t^n) R_{n+1}(x,t/q,q) + q^n (1+t^(n+1)) R_n(x,t/q,q))
/// / (x (1+t^n)) with the x-division asserted exact.
RatFunc pqrs_tq(PQRS kind, int n);

/// Independent closed form for R_n(x,t,q): coefficient of x^(n-k) is
/// (-1)^k q^binom(k,2) [n,k] c(n,k,t) where c carries binomial-ratio
/// terms that must clear against [n,k]; asserted via as_poly.
Poly r_tq_closed(int n);

/// x^(2k) -> x^k; throws when an odd x-power is present.
Poly x_even_part(const Poly& p);
/// x^(2k+1) -> x^k; throws when an even x-power is present.
Poly x_odd_part(const Poly& p);
RatFunc x_even_part(const RatFunc& f);
RatFunc x_odd_part(const RatFunc& f);

/// A named monic-in-x family, the unit of table expansion and CLI
/// addressing. generator(n) = 0 for n < 0.
struct PolyFamily {
    std::string name;
    std::function<RatFunc(int)> generator;
    /// True when member n only carries x-exponents congruent to n mod 2.
    bool alternating_parity = false;
    /// Which of q, t, x can occur in the members.
    std::vector<Var> variables = {Var::q, Var::t, Var::x};
};

/// Registry lookup; throws std::invalid_argument listing the valid names.
const PolyFamily& family(const std::string& name);
const std::vector<std::string>& family_names();

} // namespace qmoments
