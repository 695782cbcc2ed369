#include "qmoments/verify.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <stdexcept>

#include "qmoments/conjectures.hpp"
#include "qmoments/moments.hpp"
#include "qmoments/orthopoly.hpp"
#include "qmoments/qcore.hpp"
#include "qmoments/render.hpp"

namespace qmoments {

namespace {

Monomial q_pow(std::uint32_t e) { return Monomial::var(Var::q, e); }
Monomial t_pow(std::uint32_t e) { return Monomial::var(Var::t, e); }

RatFunc rf_mono(const Monomial& m) { return RatFunc(Poly::term(BigRat(1), m)); }

RatFunc at_t1(const RatFunc& f) { return substitute(f, Var::t, RatFunc(1)); }
RatFunc at_q1(const RatFunc& f) { return substitute(f, Var::q, RatFunc(1)); }
RatFunc t_to_qt(const RatFunc& f) { return substitute(f, Var::t, rf_mono(q_pow(1) * t_pow(1))); }
RatFunc t_over_q(const RatFunc& f) {
    return substitute(f, Var::t, RatFunc(Poly::var(Var::t), Poly::var(Var::q)));
}

struct Scope {
    VerificationReport rep;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Scope(std::string id, std::string title, std::string range) {
        rep.id = std::move(id);
        rep.title = std::move(title);
        rep.range = std::move(range);
    }
    bool ok() const { return rep.pass; }
    void expect(const RatFunc& lhs, const RatFunc& rhs, const std::string& where) {
        if (!rep.pass) return;
        if (!lhs.equals(rhs)) rep.fail({where, to_text(lhs), to_text(rhs), to_text(lhs - rhs)});
    }
    void expect_true(bool cond, const std::string& where) {
        if (rep.pass && !cond) rep.fail({where, "", "", ""});
    }
    VerificationReport done() {
        rep.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
};

// (1/q^k)([n,k] - [n,k-1]) as a polynomial.
Poly expansion_weight(int n, int k) {
    return (q_binom(n, k) - q_binom(n, k - 1)).divided_by_monomial(q_pow(k));
}

VerificationReport check_eq2_2(const VerifyBounds& b, Mutation) {
    Scope s("eq2.2", "x^n expanded in the q-Fibonacci family", "n <= " + std::to_string(b.carlitz));
    std::vector<Poly> v;
    for (int n = 0; n <= b.carlitz; ++n) v.push_back(qfib(n));
    auto u = carlitz_inversion(v, InvDirection::forward);
    for (int n = 0; n <= b.carlitz && s.ok(); ++n)
        s.expect(RatFunc(u[n]), RatFunc(Poly::var(Var::x, n)), "n=" + std::to_string(n));
    return s.done();
}

VerificationReport check_eq2_5(const VerifyBounds& b, Mutation) {
    Scope s("eq2.5", "x^n expanded in the q-Lucas family, with the weight bracket identity",
            "n <= " + std::to_string(b.carlitz));
    for (int n = 0; n <= b.carlitz && s.ok(); ++n) {
        Poly sum;
        for (int k = 0; 2 * k <= n; ++k) sum += q_binom(n, k) * qlucas(n - 2 * k);
        s.expect(RatFunc(sum), RatFunc(Poly::var(Var::x, n)), "n=" + std::to_string(n));
        for (int k = 0; k <= n && s.ok(); ++k) {
            Poly lhs = q_binom(n, k).times_monomial(q_pow(k)) -
                       q_binom(n, k - 1).times_monomial(q_pow(n - k + 1));
            Poly rhs = q_binom(n, k) - q_binom(n, k - 1);
            s.expect(RatFunc(lhs), RatFunc(rhs),
                     "bracket n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
    return s.done();
}

VerificationReport check_eq2_7(const VerifyBounds& b, Mutation) {
    Scope s("eq2.7", "q-Lucas as a weighted difference of q-Fibonacci members",
            "2 <= n <= " + std::to_string(b.carlitz));
    for (int n = 2; n <= b.carlitz && s.ok(); ++n) {
        Poly rhs = qfib(n) - qfib(n - 2).times_monomial(q_pow(n - 1));
        s.expect(RatFunc(qlucas(n)), RatFunc(rhs), "n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq2_8(const VerifyBounds& b, Mutation mutation) {
    Scope s("eq2.8", "alternating Gaussian-binomial sum collapses to 1",
            "0 <= k <= n <= " + std::to_string(b.carlitz));
    for (int n = 0; n <= b.carlitz && s.ok(); ++n)
        for (int k = 0; k <= n && s.ok(); ++k) {
            Poly value;
            if (mutation == Mutation::carlitz_wrong_exponent) {
                for (int j = 0; j <= std::min(k, n - k); ++j) {
                    Poly term = (q_binom(k, j) * q_binom(n - j, k))
                                    .times_monomial(q_pow(j * (j - 1) / 2));
                    value += (j % 2) ? -term : term;
                }
            } else {
                value = carlitz_c(n, k);
            }
            s.expect(RatFunc(value), RatFunc(1),
                     "n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    return s.done();
}

VerificationReport check_eq2_9(const VerifyBounds& b, Mutation) {
    Scope s("eq2.9", "four-term recursion of the q-Fibonacci family",
            "4 <= n <= " + std::to_string(b.rec4));
    for (int n = 4; n <= b.rec4 && s.ok(); ++n) {
        Poly rhs = Poly::var(Var::x) * qfib(n - 1) -
                   (Poly::var(Var::x) * qfib(n - 3)).times_monomial(q_pow(n - 2)) +
                   qfib(n - 4).times_monomial(q_pow(n - 3));
        s.expect(RatFunc(qfib(n)), RatFunc(rhs), "n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq2_10(const VerifyBounds& b, Mutation) {
    Scope s("eq2.10", "square-root recursion, checked in the q = s^2 ring",
            "2 <= n <= " + std::to_string(b.rec_sqrt));
    auto in_s = [](int n) { return substitute_poly(qfib(n), Var::q, Poly::var(Var::q, 2)); };
    for (int n = 2; n <= b.rec_sqrt && s.ok(); ++n) {
        Poly shifted = substitute_poly(in_s(n - 2), Var::x,
                                       Poly::term(BigRat(1), q_pow(1) * Monomial::var(Var::x)));
        Poly rhs = Poly::var(Var::x) * in_s(n - 1) - shifted.times_monomial(q_pow(n - 2));
        s.expect(RatFunc(in_s(n)), RatFunc(rhs), "n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq2_13_14(const VerifyBounds& b, Mutation) {
    Scope s("eq2.13", "x^n reconstructed from the split P and Q families",
            "n <= " + std::to_string(b.pqrs));
    for (int n = 0; n <= b.pqrs && s.ok(); ++n) {
        Poly sp, sq;
        for (int k = 0; k <= n; ++k) {
            sp += expansion_weight(2 * n, n - k) * pqrs(PQRS::P, k);
            sq += expansion_weight(2 * n + 1, n - k) * pqrs(PQRS::Q, k);
        }
        s.expect(RatFunc(sp), RatFunc(Poly::var(Var::x, n)), "P, n=" + std::to_string(n));
        s.expect(RatFunc(sq), RatFunc(Poly::var(Var::x, n)), "Q, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq2_16(const VerifyBounds& b, Mutation) {
    Scope s("eq2.16", "moments of the split P and Q functionals",
            "n <= " + std::to_string(b.pqrs));
    auto tp = expand_in_family(family("P"), b.pqrs);
    auto tq = expand_in_family(family("Q"), b.pqrs);
    for (int n = 0; n <= b.pqrs && s.ok(); ++n) {
        s.expect(tp.at(n, 0), moment(MomentKind::q_catalan, n), "P, n=" + std::to_string(n));
        s.expect(tq.at(n, 0), moment(MomentKind::L1_odd, n), "Q, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq2_19_20(const VerifyBounds& b, Mutation) {
    Scope s("eq2.19", "x^n reconstructed from the split R and S families, and their moments",
            "n <= " + std::to_string(b.pqrs));
    for (int n = 0; n <= b.pqrs && s.ok(); ++n) {
        Poly sr, ss;
        for (int k = 0; k <= n; ++k) {
            sr += q_binom(2 * n, n - k) * pqrs(PQRS::R, k);
            ss += q_binom(2 * n + 1, n - k) * pqrs(PQRS::S, k);
        }
        s.expect(RatFunc(sr), RatFunc(Poly::var(Var::x, n)), "R, n=" + std::to_string(n));
        s.expect(RatFunc(ss), RatFunc(Poly::var(Var::x, n)), "S, n=" + std::to_string(n));
    }
    auto tr = expand_in_family(family("R"), b.pqrs);
    auto ts = expand_in_family(family("S"), b.pqrs);
    for (int n = 0; n <= b.pqrs && s.ok(); ++n) {
        s.expect(tr.at(n, 0), RatFunc(q_binom(2 * n, n)), "R moment, n=" + std::to_string(n));
        s.expect(ts.at(n, 0), RatFunc(q_binom(2 * n + 1, n)), "S moment, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq2_21(const VerifyBounds& b, Mutation) {
    Scope s("eq2.21", "R from Q by the shifted-index relation",
            "2 <= n <= " + std::to_string(b.pqrs));
    for (int n = 2; n <= b.pqrs && s.ok(); ++n) {
        Poly rhs = pqrs(PQRS::Q, n) - pqrs(PQRS::Q, n - 2).times_monomial(q_pow(2 * n - 2));
        s.expect(RatFunc(pqrs(PQRS::R, n)), RatFunc(rhs), "n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_parts(const VerifyBounds& b, Mutation) {
    Scope s("eq2.parts", "split families agree with even/odd extraction from the q-families",
            "n <= " + std::to_string(b.pqrs));
    for (int n = 0; n <= b.pqrs && s.ok(); ++n) {
        s.expect(RatFunc(pqrs(PQRS::P, n)), RatFunc(x_even_part(qfib(2 * n))),
                 "P, n=" + std::to_string(n));
        s.expect(RatFunc(pqrs(PQRS::Q, n)), RatFunc(x_odd_part(qfib(2 * n + 1))),
                 "Q, n=" + std::to_string(n));
        s.expect(RatFunc(pqrs(PQRS::R, n)), RatFunc(x_even_part(qlucas(2 * n))),
                 "R, n=" + std::to_string(n));
        s.expect(RatFunc(pqrs(PQRS::S, n)), RatFunc(x_odd_part(qlucas(2 * n + 1))),
                 "S, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_inversion(const VerifyBounds& b, Mutation) {
    Scope s("lemma.inversion", "the two triangular transforms compose to the identity",
            "length <= " + std::to_string(b.inversion + 1));
    std::vector<Poly> xs, fs;
    for (int n = 0; n <= b.inversion; ++n) {
        xs.push_back(Poly::var(Var::x, n));
        fs.push_back(qfib(n));
    }
    auto round1 = carlitz_inversion(carlitz_inversion(xs, InvDirection::forward),
                                    InvDirection::backward);
    auto round2 = carlitz_inversion(carlitz_inversion(fs, InvDirection::backward),
                                    InvDirection::forward);
    for (int n = 0; n <= b.inversion && s.ok(); ++n) {
        s.expect(RatFunc(round1[n]), RatFunc(xs[n]), "backward(forward), n=" + std::to_string(n));
        s.expect(RatFunc(round2[n]), RatFunc(fs[n]), "forward(backward), n=" + std::to_string(n));
    }
    // forward applied to the q-Fibonacci sequence gives back the monomials
    auto u = carlitz_inversion(fs, InvDirection::forward);
    for (int n = 0; n <= b.inversion && s.ok(); ++n)
        s.expect(RatFunc(u[n]), RatFunc(xs[n]), "forward on the family, n=" + std::to_string(n));
    return s.done();
}

VerificationReport check_thm1_closed(const VerifyBounds& b, Mutation) {
    Scope s("thm1.closed", "recurrence vs closed form for F(x,t,q)",
            "n <= " + std::to_string(2 * b.thm1));
    for (int n = 0; n <= 2 * b.thm1 && s.ok(); ++n)
        s.expect(RatFunc(fib_tq(n)), RatFunc(fib_tq_closed(n)), "n=" + std::to_string(n));
    return s.done();
}

VerificationReport check_thm1_reduce(const VerifyBounds& b, Mutation) {
    Scope s("thm1.reduce", "F(x,t,q) reductions at t = 1 and q = 1",
            "n <= " + std::to_string(2 * b.thm1));
    for (int n = 0; n <= 2 * b.thm1 && s.ok(); ++n) {
        s.expect(at_t1(RatFunc(fib_tq(n))), RatFunc(qfib(n)), "t=1, n=" + std::to_string(n));
        s.expect(at_q1(RatFunc(fib_tq(n))), RatFunc(fib_t(n)), "q=1, n=" + std::to_string(n));
        s.expect(RatFunc(fib_t(n)), RatFunc(fib_t_closed(n)),
                 "t-family closed form, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_thm1_table(const VerifyBounds& b, Mutation) {
    int N = 2 * b.thm1 + 1;
    Scope s("thm1.table", "x^n expansion table of F(x,t,q): closed form and recurrences",
            "rows <= " + std::to_string(N));
    auto table = expand_in_family(family("fib_tq"), N);
    for (int n = 0; n <= N && s.ok(); ++n)
        for (int k = 0; k <= n && s.ok(); ++k)
            s.expect(table.at(n, k), a_fibtq_closed(n, k),
                     "closed form, n=" + std::to_string(n) + ", k=" + std::to_string(k));
    // the column recurrence induced by the family recurrence
    for (int n = 1; n <= N && s.ok(); ++n)
        for (int k = 0; k <= n && s.ok(); ++k) {
            RatFunc rhs = t_to_qt(table.at(n - 1, k - 1)) +
                          RatFunc(tau_fib(k).times_monomial(q_pow((k + 1) / 2))) *
                              t_to_qt(table.at(n - 1, k + 1));
            s.expect(table.at(n, k), rhs,
                     "recurrence, n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    // same-parity cross recurrences on the closed forms
    for (int n = 1; 2 * n + 1 <= N && s.ok(); ++n)
        for (int k = 0; k <= n && s.ok(); ++k) {
            RatFunc even_rhs = t_to_qt(a_fibtq_closed(2 * n - 1, 2 * k - 1)) +
                               rf_mono(q_pow(k)) * t_to_qt(a_fibtq_closed(2 * n - 1, 2 * k + 1));
            s.expect(a_fibtq_closed(2 * n, 2 * k), even_rhs,
                     "even step, n=" + std::to_string(n) + ", k=" + std::to_string(k));
            RatFunc odd_rhs = t_to_qt(a_fibtq_closed(2 * n, 2 * k)) +
                              rf_mono(q_pow(k + 1) * t_pow(1)) *
                                  t_to_qt(a_fibtq_closed(2 * n, 2 * k + 2));
            s.expect(a_fibtq_closed(2 * n + 1, 2 * k + 1), odd_rhs,
                     "odd step, n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    return s.done();
}

VerificationReport check_thm1_moments(const VerifyBounds& b, Mutation) {
    Scope s("thm1.moments", "q-Narayana moments of F(x,t,q) and their specializations",
            "n <= " + std::to_string(b.thm1));
    auto table = expand_in_family(family("fib_tq"), 2 * b.thm1 + 1);
    for (int n = 0; n <= b.thm1 && s.ok(); ++n) {
        s.expect(table.at(2 * n, 0), moment(MomentKind::q_narayana, n),
                 "even row " + std::to_string(2 * n));
        if (2 * n + 1 <= table.limit())
            s.expect(table.at(2 * n + 1, 0), RatFunc(0), "odd row " + std::to_string(2 * n + 1));
        s.expect(a_fibtq_closed(2 * n, 0), moment(MomentKind::q_narayana, n),
                 "closed form, n=" + std::to_string(n));
        s.expect(at_t1(moment(MomentKind::q_narayana, n)), moment(MomentKind::q_catalan, n),
                 "t=1, n=" + std::to_string(n));
        s.expect(at_q1(moment(MomentKind::q_narayana, n)), moment(MomentKind::narayana, n),
                 "q=1, n=" + std::to_string(n));
        // C_n(1/q, q) = (1+q)/(1+q^n) C_n(q)
        if (n >= 1) {
            RatFunc lhs = substitute(moment(MomentKind::q_narayana, n), Var::t,
                                     RatFunc(Poly(1), Poly::var(Var::q)));
            RatFunc rhs = RatFunc((Poly(1) + Poly::var(Var::q)), Poly(1) + Poly::var(Var::q, n)) *
                          moment(MomentKind::q_catalan, n);
            s.expect(lhs, rhs, "t=1/q, n=" + std::to_string(n));
        }
    }
    return s.done();
}

VerificationReport check_cor1_B(const VerifyBounds& b, Mutation) {
    Scope s("cor1.B", "the Q(x,t,q) family: closed form, expansion table, and moments",
            "n <= " + std::to_string(b.tables));
    for (int n = 0; n <= b.tables && s.ok(); ++n)
        s.expect(pqrs_tq(PQRS::Q, n), x_odd_part(RatFunc(fib_tq(2 * n + 1))),
                 "odd part, n=" + std::to_string(n));
    auto table = expand_in_family(family("Q_tq"), b.tables);
    for (int n = 0; n <= b.tables && s.ok(); ++n) {
        for (int k = 0; k <= n && s.ok(); ++k) {
            s.expect(table.at(n, k), table_ABDE(TableKind::B, n, k),
                     "table entry n=" + std::to_string(n) + ", k=" + std::to_string(k));
            s.expect(table_ABDE(TableKind::B, n, k), b_alt(n, k),
                     "alternative form n=" + std::to_string(n) + ", k=" + std::to_string(k));
            s.expect(at_t1(table_ABDE(TableKind::B, n, k)),
                     RatFunc(expansion_weight(2 * n + 1, n - k)),
                     "t=1 reduction n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
        // direct reconstruction of x^n
        RatFunc sum;
        for (int k = 0; k <= n; ++k) sum += table_ABDE(TableKind::B, n, k) * pqrs_tq(PQRS::Q, k);
        s.expect(sum, RatFunc(Poly::var(Var::x, n)), "reconstruction n=" + std::to_string(n));
        s.expect(table_ABDE(TableKind::B, n, 0), t_over_q(moment(MomentKind::q_narayana, n + 1)),
                 "column 0, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_cor1_A(const VerifyBounds& b, Mutation) {
    Scope s("cor1.A", "the P(x,t,q) family: closed form, expansion table, and moments",
            "n <= " + std::to_string(b.tables));
    for (int n = 0; n <= b.tables && s.ok(); ++n)
        s.expect(pqrs_tq(PQRS::P, n), x_even_part(RatFunc(fib_tq(2 * n))),
                 "even part, n=" + std::to_string(n));
    auto table = expand_in_family(family("P_tq"), b.tables);
    for (int n = 0; n <= b.tables && s.ok(); ++n) {
        for (int k = 0; k <= n && s.ok(); ++k)
            s.expect(table.at(n, k), table_ABDE(TableKind::A, n, k),
                     "table entry n=" + std::to_string(n) + ", k=" + std::to_string(k));
        RatFunc sum;
        for (int k = 0; k <= n; ++k) sum += table_ABDE(TableKind::A, n, k) * pqrs_tq(PQRS::P, k);
        s.expect(sum, RatFunc(Poly::var(Var::x, n)), "reconstruction n=" + std::to_string(n));
        s.expect(table_ABDE(TableKind::A, n, 0), moment(MomentKind::q_narayana, n),
                 "column 0, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_thm2_family(const VerifyBounds& b, Mutation) {
    Scope s("thm2.family", "L(x,t,q) reductions at t = 1 and q = 1",
            "n <= " + std::to_string(2 * b.thm2));
    for (int n = 0; n <= 2 * b.thm2 && s.ok(); ++n) {
        s.expect(at_t1(lucas_tq(n)), RatFunc(qlucas(n)), "t=1, n=" + std::to_string(n));
        s.expect(at_q1(lucas_tq(n)), lucas_t(n), "q=1, n=" + std::to_string(n));
        // even members clear to polynomials of full degree; as_poly throws otherwise
        if (n % 2 == 0)
            s.expect_true(static_cast<int>(lucas_tq(n).as_poly().degree(Var::x)) == n,
                          "polynomial clearing, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_thm2_table(const VerifyBounds& b, Mutation) {
    int N = 2 * b.thm2 + 1;
    Scope s("thm2.table", "x^n expansion table of L(x,t,q): recurrence, closed forms, moments",
            "rows <= " + std::to_string(N));
    auto table = expand_in_family(family("lucas_tq"), N);
    for (int n = 1; n <= N && s.ok(); ++n)
        for (int k = 0; k <= n && s.ok(); ++k) {
            RatFunc rhs = t_to_qt(table.at(n - 1, k - 1)) +
                          tau_lucas(k) * t_to_qt(table.at(n - 1, k + 1));
            s.expect(table.at(n, k), rhs,
                     "recurrence, n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    for (int n = 0; 2 * n <= N && s.ok(); ++n)
        for (int k = 0; k <= n && s.ok(); ++k) {
            s.expect(table.at(2 * n, 2 * k), table_ABDE(TableKind::D, n, k),
                     "even entries, n=" + std::to_string(n) + ", k=" + std::to_string(k));
            if (2 * n + 1 <= N) {
                s.expect(table.at(2 * n + 1, 2 * k + 1), table_ABDE(TableKind::E, n, k),
                         "odd entries, n=" + std::to_string(n) + ", k=" + std::to_string(k));
                s.expect(table_ABDE(TableKind::E, n, k), e_alt(n, k),
                         "split form, n=" + std::to_string(n) + ", k=" + std::to_string(k));
            }
            s.expect(at_t1(table_ABDE(TableKind::D, n, k)), RatFunc(q_binom(2 * n, n - k)),
                     "even t=1, n=" + std::to_string(n) + ", k=" + std::to_string(k));
            s.expect(at_t1(table_ABDE(TableKind::E, n, k)), RatFunc(q_binom(2 * n + 1, n - k)),
                     "odd t=1, n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    for (int n = 0; 2 * n <= N && s.ok(); ++n) {
        s.expect(table.at(2 * n, 0), moment(MomentKind::typeB_M, n),
                 "moments, n=" + std::to_string(n));
        if (2 * n + 1 <= N)
            s.expect(table.at(2 * n + 1, 0), RatFunc(0), "odd rows vanish, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq3_31(const VerifyBounds& b, Mutation mutation) {
    auto rep = b_d_relation_check(b.tables, mutation);
    return rep;
}

VerificationReport check_eq3_32(const VerifyBounds& b, Mutation) {
    Scope s("eq3.32", "R(x,t,q): shifted-Q relation vs the weighted closed form",
            "n <= " + std::to_string(b.r_closed));
    for (int n = 0; n <= b.r_closed && s.ok(); ++n)
        s.expect(pqrs_tq(PQRS::R, n), RatFunc(r_tq_closed(n)), "n=" + std::to_string(n));
    return s.done();
}

VerificationReport check_eq3_37(const VerifyBounds& b, Mutation) {
    Scope s("eq3.37", "x^n reconstructed from the R(x,t,q) family; type-B moments",
            "n <= " + std::to_string(b.tables));
    auto table = expand_in_family(family("R_tq"), b.tables);
    for (int n = 0; n <= b.tables && s.ok(); ++n) {
        RatFunc sum;
        for (int k = 0; k <= n; ++k) sum += table_ABDE(TableKind::D, n, k) * pqrs_tq(PQRS::R, k);
        s.expect(sum, RatFunc(Poly::var(Var::x, n)), "reconstruction n=" + std::to_string(n));
        for (int k = 0; k <= n && s.ok(); ++k)
            s.expect(table.at(n, k), table_ABDE(TableKind::D, n, k),
                     "table entry n=" + std::to_string(n) + ", k=" + std::to_string(k));
        s.expect(table_ABDE(TableKind::D, n, 0), moment(MomentKind::typeB_M, n),
                 "column 0, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq3_39(const VerifyBounds& b, Mutation) {
    Scope s("eq3.39", "S(x,t,q) from shifted R agrees with the odd part of L(x,t,q)",
            "n <= " + std::to_string(b.tables));
    for (int n = 0; n <= b.tables && s.ok(); ++n)
        s.expect(pqrs_tq(PQRS::S, n), x_odd_part(lucas_tq(2 * n + 1)), "n=" + std::to_string(n));
    return s.done();
}

VerificationReport check_eq3_41(const VerifyBounds& b, Mutation) {
    Scope s("eq3.41", "x^n reconstructed from the S(x,t,q) family; shifted type-B moments",
            "n <= " + std::to_string(b.tables));
    auto table = expand_in_family(family("S_tq"), b.tables);
    for (int n = 0; n <= b.tables && s.ok(); ++n) {
        RatFunc sum;
        for (int k = 0; k <= n; ++k) sum += table_ABDE(TableKind::E, n, k) * pqrs_tq(PQRS::S, k);
        s.expect(sum, RatFunc(Poly::var(Var::x, n)), "reconstruction n=" + std::to_string(n));
        for (int k = 0; k <= n && s.ok(); ++k)
            s.expect(table.at(n, k), table_ABDE(TableKind::E, n, k),
                     "table entry n=" + std::to_string(n) + ", k=" + std::to_string(k));
        s.expect(table_ABDE(TableKind::E, n, 0), moment(MomentKind::M1_odd, n),
                 "column 0, n=" + std::to_string(n));
    }
    return s.done();
}

VerificationReport check_eq3_43(const VerifyBounds& b, Mutation mutation) {
    return catalan_stieltjes_check(b.tables, mutation);
}

} // namespace

const std::vector<IdentityCheck>& identity_suite() {
    static const std::vector<IdentityCheck> suite = {
        {"eq2.2", "x^n expanded in the q-Fibonacci family", check_eq2_2},
        {"eq2.5", "x^n expanded in the q-Lucas family", check_eq2_5},
        {"eq2.7", "q-Lucas from q-Fibonacci", check_eq2_7},
        {"eq2.8", "alternating unit sum", check_eq2_8},
        {"eq2.9", "four-term q-Fibonacci recursion", check_eq2_9},
        {"eq2.10", "square-root recursion in the substituted ring", check_eq2_10},
        {"eq2.13", "x^n from the split P/Q families", check_eq2_13_14},
        {"eq2.16", "split P/Q moments", check_eq2_16},
        {"eq2.19", "x^n from the split R/S families and their moments", check_eq2_19_20},
        {"eq2.21", "R from Q, shifted-index relation", check_eq2_21},
        {"eq2.parts", "split families vs even/odd extraction", check_parts},
        {"lemma.inversion", "inversion round-trips", check_inversion},
        {"thm1.closed", "F(x,t,q) recurrence vs closed form", check_thm1_closed},
        {"thm1.reduce", "F(x,t,q) reductions", check_thm1_reduce},
        {"thm1.table", "F(x,t,q) expansion table", check_thm1_table},
        {"thm1.moments", "q-Narayana moments and specializations", check_thm1_moments},
        {"cor1.B", "Q(x,t,q) family and its table", check_cor1_B},
        {"cor1.A", "P(x,t,q) family and its table", check_cor1_A},
        {"thm2.family", "L(x,t,q) reductions", check_thm2_family},
        {"thm2.table", "L(x,t,q) expansion table", check_thm2_table},
        {"eq3.31", "B from D column relation", check_eq3_31},
        {"eq3.32", "R(x,t,q) closed form", check_eq3_32},
        {"eq3.37", "x^n from R(x,t,q); type-B moments", check_eq3_37},
        {"eq3.39", "S(x,t,q) vs the odd part of L(x,t,q)", check_eq3_39},
        {"eq3.41", "x^n from S(x,t,q); shifted type-B moments", check_eq3_41},
        {"eq3.43", "Catalan-Stieltjes recurrences", check_eq3_43},
    };
    return suite;
}

std::vector<VerificationReport> run_identity_suite(const VerifyBounds& bounds,
                                                   const std::vector<std::string>& only, int jobs,
                                                   Mutation mutation) {
    std::vector<const IdentityCheck*> selected;
    for (const auto& check : identity_suite()) {
        if (only.empty()) {
            selected.push_back(&check);
            continue;
        }
        for (const auto& id : only)
            if (check.id == id) {
                selected.push_back(&check);
                break;
            }
    }
    if (!only.empty() && selected.empty())
        throw std::invalid_argument("run_identity_suite: no identity matches the requested ids");

    auto run_one = [&](const IdentityCheck& check) {
        try {
            return check.run(bounds, mutation);
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.id = check.id;
            rep.title = check.title;
            rep.pass = false;
            rep.note = std::string("evaluation error: ") + e.what();
            return rep;
        }
    };

    std::vector<VerificationReport> out(selected.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) out[i] = run_one(*selected[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            out[i] = run_one(*selected[i]);
        }
    };
    std::vector<std::future<void>> pool;
    for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return out;
}

Mutation mutation_from_name(const std::string& name) {
    if (name == "stieltjes-drop-q") return Mutation::stieltjes_drop_q_factor;
    if (name == "bd-wrong-power") return Mutation::bd_wrong_q_power;
    if (name == "carlitz-wrong-exponent") return Mutation::carlitz_wrong_exponent;
    throw std::invalid_argument("unknown mutation '" + name +
                                "'; valid: stieltjes-drop-q bd-wrong-power carlitz-wrong-exponent");
}

const std::vector<std::string>& mutation_names() {
    static const std::vector<std::string> names = {"stieltjes-drop-q", "bd-wrong-power",
                                                   "carlitz-wrong-exponent"};
    return names;
}

} // namespace qmoments
