#include <doctest.h>

#include "qmoments/moments.hpp"
#include "qmoments/orthopoly.hpp"
#include "test_util.hpp"

using namespace qmoments;
using namespace qmoments::testutil;

TEST_SUITE_BEGIN("orthopoly");

TEST_CASE("hankel determinants of the interleaved q-Catalan moments") {
    const auto& seq = moment_sequence("qcatalan_full");
    CHECK(hankel_det(seq, 0) == RatFunc(1));
    CHECK(hankel_det(seq, 1) == RatFunc(1));  // det diag(1, C_1) with zero off-diagonal
    RatFunc d3 = hankel_det(seq, 3);
    CHECK_FALSE(d3.is_zero());
    CHECK(d3 == cofactor_det(hankel_matrix(seq, 3)));
    // size 0 is 1 for every unit-normalized sequence
    for (const auto& name : moment_sequence_names())
        CHECK(hankel_det(moment_sequence(name), 0) == RatFunc(1));
}

TEST_CASE("orthogonal polynomials for the q-Catalan moments") {
    const auto& seq = moment_sequence("qcatalan_full");
    auto ps = orthogonal_polys(seq, 6);
    CHECK(ps[0] == RatFunc(1));
    CHECK(ps[1] == RatFunc(X()));
    CHECK(ps[2] == RatFunc(X(2) - C(1)));
    CHECK(ps[3] == RatFunc(X(3) - (C(1) + Q(2)) * X()));
    // the degree-4 member, with the reading "constant term = -1+q+q^4"
    RatFunc p4_reading_a(X(4) - (Q() + Q(2) + Q(4)) * X(2) - C(1) + Q() + Q(4));
    RatFunc p4_reading_b(X(4) - (Q() + Q(2) + Q(4)) * X(2) - (C(1) + Q() + Q(4)));
    CHECK(ps[4] == p4_reading_a);
    CHECK(ps[4] != p4_reading_b);
    // the unambiguous degree-5 x^3 coefficient
    RatFunc c53 = coeff_of(ps[5], Var::x, 3);
    RatFunc expected(-(C(1) + Q()) * (C(1) - Q() + Q(2)) * (-C(1) + Q(3) + Q(5) + Q(7)),
                     -C(1) + Q() + Q(4));
    CHECK(c53 == expected);

    // orthogonality and unit-normalized application
    for (int n = 0; n <= 6; ++n) {
        for (int m = 0; m < n; ++m) CHECK(functional_apply(seq, ps[n] * ps[m]).is_zero());
        CHECK_FALSE(functional_apply(seq, ps[n] * ps[n]).is_zero());
        CHECK(functional_apply(seq, ps[n]) == (n == 0 ? RatFunc(1) : RatFunc(0)));
    }
}

TEST_CASE("determinant-ratio cross-check for the first members") {
    const auto& seq = moment_sequence("qcatalan_full");
    auto ps = orthogonal_polys(seq, 4);
    for (int n = 1; n <= 4; ++n) {
        // p_n = det(moment rows | monomial row) / det(a_{i+j})_{0..n-1}
        Matrix m(n + 1, std::vector<RatFunc>(n + 1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= n; ++j) m[i][j] = seq.value(i + j);
        for (int j = 0; j <= n; ++j) m[n][j] = RatFunc(X(j));
        RatFunc ratio = det_exact(m) / hankel_det(seq, n - 1);
        CHECK(ratio == ps[n]);
    }
}

TEST_CASE("functional application basics") {
    const auto& seq = moment_sequence("qcatalan_full");
    CHECK(functional_apply(seq, RatFunc(1)) == RatFunc(1));
    CHECK(functional_apply(seq, RatFunc(X(2))) == RatFunc(1));
    CHECK(functional_apply(seq, RatFunc(qfib(4))).is_zero());
}

TEST_CASE("expansion over the orthogonal family reproduces the printed table") {
    auto fam = orthogonal_family(moment_sequence("qcatalan_full"), 5);
    CHECK(fam.alternating_parity);
    auto t = expand_in_family(fam, 5);
    CHECK(t.at(0, 0) == RatFunc(1));
    CHECK(t.at(2, 0) == RatFunc(1));
    CHECK(t.at(3, 1) == RatFunc(C(1) + Q(2)));
    CHECK(t.at(4, 0) == RatFunc(C(1) + Q(2)));
    // this entry differs from the q-Fibonacci table at the same position
    CHECK(t.at(4, 2) == RatFunc(Q() * (C(1) + Q() + Q(3))));
    CHECK(a_qfib_entry(4, 2) == RatFunc(C(1) + Q() + Q(2)));
    // row 5: the printed product factorization and the shared denominator entry
    CHECK(t.at(5, 1) == RatFunc((C(1) - Q() + Q(2)) * (C(1) + Q() + Q(2) + Q(3) + Q(4))));
    RatFunc a53((C(1) + Q()) * (C(1) - Q() + Q(2)) * (-C(1) + Q(3) + Q(5) + Q(7)),
                -C(1) + Q() + Q(4));
    CHECK(t.at(5, 3) == a53);
}

TEST_CASE("moment functionals kill their families") {
    struct Pair {
        const char* seq;
        const char* fam;
    };
    for (auto [sname, fname] : {Pair{"qnarayana_full", "fib_tq"}, Pair{"typeB_full", "lucas_tq"},
                                Pair{"qcatalan_full", "qfib"}, Pair{"central_full", "qlucas"}}) {
        const auto& seq = moment_sequence(sname);
        const auto& fam = family(fname);
        CHECK(functional_apply(seq, fam.generator(0)) == RatFunc(1));
        for (int n = 1; n <= 10; ++n)
            CHECK(functional_apply(seq, fam.generator(n)).is_zero());
    }
}

TEST_CASE("unknown sequence name lists the registry") {
    CHECK_THROWS_WITH_AS(moment_sequence("nope"), doctest::Contains("valid names"),
                         std::invalid_argument);
}

TEST_CASE("vanishing Hankel determinant is reported with its index") {
    // all-ones moments: the 2x2 Hankel determinant vanishes
    MomentSequence ones{"ones", [](int) { return RatFunc(1); }};
    CHECK(hankel_det(ones, 1).is_zero());
    CHECK_THROWS_WITH_AS(orthogonal_polys(ones, 3), doctest::Contains("index 1"),
                         std::domain_error);
}

TEST_SUITE_END();
