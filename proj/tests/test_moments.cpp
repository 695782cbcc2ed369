#include <doctest.h>

#include "qmoments/moments.hpp"
#include "qmoments/qcore.hpp"
#include "test_util.hpp"

using namespace qmoments;
using namespace qmoments::testutil;

TEST_SUITE_BEGIN("moments");

TEST_CASE("expansion table of the q-Fibonacci family matches the printed rows") {
    auto t = expand_in_family(family("qfib"), 5);
    CHECK(t.at(0, 0) == RatFunc(1));
    CHECK(t.at(3, 1) == RatFunc(C(1) + Q()));
    // row 4: (1+q^2, 0, 1+q+q^2, 0, 1)
    CHECK(t.at(4, 0) == RatFunc(C(1) + Q(2)));
    CHECK(t.at(4, 1).is_zero());
    CHECK(t.at(4, 2) == RatFunc(C(1) + Q() + Q(2)));
    CHECK(t.at(4, 3).is_zero());
    CHECK(t.at(4, 4) == RatFunc(1));
    // row 5: (0, 1+q+q^2+q^3+q^4, 0, (1+q)(1+q^2), 0, 1)
    CHECK(t.at(5, 0).is_zero());
    CHECK(t.at(5, 1) == RatFunc(C(1) + Q() + Q(2) + Q(3) + Q(4)));
    CHECK(t.at(5, 3) == RatFunc((C(1) + Q()) * (C(1) + Q(2))));
    CHECK(t.at(5, 5) == RatFunc(1));
}

TEST_CASE("closed form of the q-Fibonacci expansion coefficients") {
    CHECK(a_qfib_closed(0, 0) == C(1));
    CHECK(a_qfib_closed(0, 7) == C(1));
    CHECK(a_qfib_closed(1, 2) == C(1) + Q() + Q(2));
    CHECK(a_qfib_closed(2, 0) == C(1) + Q(2));
    auto table = expand_in_family(family("qfib"), 12);
    for (int row = 0; row <= 12; ++row)
        for (int col = 0; col <= row; ++col) {
            CHECK(table.at(row, col) == a_qfib_entry(row, col));
            if ((row - col) % 2 == 0) {
                // the 1/q^n form agrees with the cleared form
                CHECK(a_qfib_alt((row - col) / 2, col) == a_qfib_entry(row, col));
            }
        }
}

TEST_CASE("expansion of F(x,t,q) matches its closed form and moments") {
    auto table = expand_in_family(family("fib_tq"), 9);
    for (int row = 0; row <= 9; ++row)
        for (int col = 0; col <= row; ++col) CHECK(table.at(row, col) == a_fibtq_closed(row, col));
    CHECK(a_fibtq_closed(0, 0) == RatFunc(1));
    for (int n = 0; n <= 4; ++n) {
        CHECK(a_fibtq_closed(2 * n, 0) == moment(MomentKind::q_narayana, n));
        // t = 1 collapses to the q-Fibonacci coefficients
        for (int col = 0; col <= 2 * n; ++col)
            CHECK(substitute(a_fibtq_closed(2 * n, col), Var::t, RatFunc(1)) ==
                  a_qfib_entry(2 * n, col));
    }
    CHECK(substitute(a_fibtq_closed(4, 2), Var::t, RatFunc(1)) == RatFunc(C(1) + Q() + Q(2)));
}

TEST_CASE("A table first terms") {
    CHECK(table_ABDE(TableKind::A, 2, 0) == RatFunc(C(1) + mono(1, 2, 1, 0)));
    CHECK(table_ABDE(TableKind::A, 3, 0) ==
          RatFunc(C(1) + mono(1, 2, 1, 0) + mono(1, 3, 1, 0) + mono(1, 4, 1, 0) + mono(1, 6, 2, 0)));
    CHECK(table_ABDE(TableKind::A, 5, 9).is_zero());
}

TEST_CASE("B and D reductions at t = 1") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            Poly w = (q_binom(2 * n + 1, n - k) - q_binom(2 * n + 1, n - k - 1))
                         .divided_by_monomial(Monomial::var(Var::q, n - k));
            CHECK(substitute(table_ABDE(TableKind::B, n, k), Var::t, RatFunc(1)) == RatFunc(w));
            CHECK(substitute(table_ABDE(TableKind::D, n, k), Var::t, RatFunc(1)) ==
                  RatFunc(q_binom(2 * n, n - k)));
        }
}

TEST_CASE("moment values") {
    CHECK(moment(MomentKind::q_narayana, 2) == RatFunc(C(1) + mono(1, 2, 1, 0)));
    CHECK(moment(MomentKind::q_catalan, 2) == RatFunc(C(1) + Q(2)));
    CHECK(moment(MomentKind::typeB_M, 1) == RatFunc(C(1) + mono(1, 1, 1, 0)));
    CHECK(moment(MomentKind::narayana, 3) == RatFunc(C(1) + T().scaled(BigRat(3)) + T(2)));
    CHECK(moment(MomentKind::central_qbinom, 2) == RatFunc(q_binom(4, 2)));
    // both printed forms of the q-Catalan numbers agree
    for (int n = 0; n <= 8; ++n) {
        RatFunc alt(q_binom(2 * n, n) - q_binom(2 * n, n - 1),
                    Poly::term(BigRat(1), Monomial::var(Var::q, n)));
        CHECK(moment(MomentKind::q_catalan, n) == alt);
    }
}

TEST_CASE("moment specializations") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(substitute(moment(MomentKind::q_narayana, n), Var::t, RatFunc(1)) ==
              moment(MomentKind::q_catalan, n));
        CHECK(substitute(moment(MomentKind::q_narayana, n), Var::q, RatFunc(1)) ==
              moment(MomentKind::narayana, n));
    }
    for (int n = 1; n <= 6; ++n) {
        RatFunc lhs = substitute(moment(MomentKind::q_narayana, n), Var::t, RatFunc(C(1), Q()));
        RatFunc rhs = RatFunc(C(1) + Q(), C(1) + Q(n)) * moment(MomentKind::q_catalan, n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("x^n reconstructions in the split families") {
    auto weight = [](int n, int k) {
        return (q_binom(n, k) - q_binom(n, k - 1)).divided_by_monomial(Monomial::var(Var::q, k));
    };
    for (int n = 0; n <= 6; ++n) {
        Poly sp, sq, sr, ss;
        for (int k = 0; k <= n; ++k) {
            sp += weight(2 * n, n - k) * pqrs(PQRS::P, k);
            sq += weight(2 * n + 1, n - k) * pqrs(PQRS::Q, k);
            sr += q_binom(2 * n, n - k) * pqrs(PQRS::R, k);
            ss += q_binom(2 * n + 1, n - k) * pqrs(PQRS::S, k);
        }
        CHECK(sp == X(n));
        CHECK(sq == X(n));
        CHECK(sr == X(n));
        CHECK(ss == X(n));
    }
    // the corresponding moments
    auto tr = expand_in_family(family("R"), 6);
    auto ts = expand_in_family(family("S"), 6);
    auto tq = expand_in_family(family("Q"), 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(tr.at(n, 0) == RatFunc(q_binom(2 * n, n)));
        CHECK(ts.at(n, 0) == RatFunc(q_binom(2 * n + 1, n)));
        CHECK(tq.at(n, 0) == moment(MomentKind::L1_odd, n));
    }
}

TEST_CASE("x^n expanded in the q-Lucas family with the bracket identity") {
    for (int n = 0; n <= 10; ++n) {
        Poly sum;
        for (int k = 0; 2 * k <= n; ++k) sum += q_binom(n, k) * qlucas(n - 2 * k);
        CHECK(sum == X(n));
        for (int k = 0; k <= n; ++k) {
            Poly lhs = q_binom(n, k).times_monomial(Monomial::var(Var::q, k)) -
                       q_binom(n, k - 1).times_monomial(Monomial::var(Var::q, n - k + 1));
            CHECK(lhs == q_binom(n, k) - q_binom(n, k - 1));
        }
    }
}

TEST_CASE("Catalan-Stieltjes recurrences and negative control") {
    CHECK(catalan_stieltjes_check(1).pass);
    CHECK(catalan_stieltjes_check(6).pass);
    auto bad = catalan_stieltjes_check(6, Mutation::stieltjes_drop_q_factor);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.counterexample.has_value());
    CHECK(bad.counterexample->where == "n=3, k=1");
    CHECK_FALSE(bad.counterexample->difference.empty());
}

TEST_CASE("B/D column relation and negative control") {
    CHECK(b_d_relation_check(0).pass);
    CHECK(b_d_relation_check(6).pass);
    auto bad = b_d_relation_check(6, Mutation::bd_wrong_q_power);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.counterexample.has_value());
}

TEST_CASE("second forms of B and E") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(table_ABDE(TableKind::B, n, k) == b_alt(n, k));
            CHECK(table_ABDE(TableKind::E, n, k) == e_alt(n, k));
        }
}

TEST_CASE("expand_in_family rejects a non-monic family") {
    PolyFamily bad{"bad", [](int n) { return RatFunc(X(n).scaled(BigRat(2))); }, false};
    CHECK_THROWS_WITH_AS(expand_in_family(bad, 2), doctest::Contains("not monic"),
                         std::domain_error);
}

TEST_SUITE_END();
