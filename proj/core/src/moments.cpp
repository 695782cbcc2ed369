#include "qmoments/moments.hpp"

#include <chrono>
#include <sstream>

#include "qmoments/qcore.hpp"
#include "qmoments/render.hpp"

namespace qmoments {

namespace {

Monomial q_pow(std::uint32_t e) { return Monomial::var(Var::q, e); }
Monomial t_pow(std::uint32_t e) { return Monomial::var(Var::t, e); }

const RatFunc& zero_rf() {
    static const RatFunc z;
    return z;
}

BigRat binom(long n, long k) {
    if (k < 0) return BigRat(0);
    if (k == 0) return BigRat(1);
    if (n < 0 || k > n) return BigRat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigRat(b.get_str());
}

} // namespace

TriangularTable::TriangularTable(std::string name, int limit)
    : name_(std::move(name)), limit_(limit), rows_(limit + 1) {
    for (int n = 0; n <= limit; ++n) rows_[n].resize(n + 1);
}

const RatFunc& TriangularTable::at(int n, int k) const {
    if (n < 0 || n > limit_) throw std::out_of_range("TriangularTable: row out of range");
    if (k < 0 || k > n) return zero_rf();
    return rows_[n][k];
}

void TriangularTable::set(int n, int k, RatFunc v) {
    rows_.at(n).at(k) = std::move(v);
}

TriangularTable expand_in_family(const PolyFamily& fam, int N) {
    // x-coefficient numerators and the shared denominator of each member,
    // checked monic of full degree. Keeping the rows over one common
    // denominator bounds the growth that blind field arithmetic would
    // cause without a polynomial GCD.
    std::vector<std::vector<Poly>> cnum(N + 1);
    std::vector<Poly> cden(N + 1);
    for (int k = 0; k <= N; ++k) {
        RatFunc pk = fam.generator(k);
        if (pk.den().depends_on(Var::x))
            throw std::domain_error("expand_in_family: member denominator depends on x");
        if (static_cast<int>(pk.num().degree(Var::x)) > k)
            throw std::domain_error("expand_in_family: member " + std::to_string(k) +
                                    " exceeds degree " + std::to_string(k));
        cden[k] = pk.den();
        cnum[k].resize(k + 1);
        for (int j = 0; j <= k; ++j) cnum[k][j] = pk.num().coeff_of(Var::x, j);
        // monic: the top x-coefficient equals the denominator exactly
        if (cnum[k][k] != cden[k])
            throw std::domain_error("expand_in_family: member " + std::to_string(k) + " of '" +
                                    fam.name + "' is not monic");
    }

    TriangularTable table(fam.name, N);
    for (int n = 0; n <= N; ++n) {
        // residue = nums[.] / den, initially x^n
        std::vector<Poly> nums(n + 1);
        Poly den(1);
        nums[n] = Poly(1);
        for (int k = n; k >= 0; --k) {
            table.set(n, k, RatFunc(nums[k], den));
            if (nums[k].is_zero()) continue;
            for (int j = 0; j < k; ++j) nums[j] = nums[j] * cden[k] - nums[k] * cnum[k][j];
            nums[k] = Poly();
            den *= cden[k];
        }
        for (int j = 0; j <= n; ++j)
            if (!nums[j].is_zero())
                throw std::logic_error("expand_in_family: reconstruction failed at row " +
                                       std::to_string(n));
    }
    return table;
}

Poly a_qfib_closed(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("a_qfib_closed: negative parameter");
    RatFunc v = RatFunc(q_int(k + 1) * q_binom(2 * n + k, n)) / RatFunc(q_int(n + k + 1));
    return v.as_poly();
}

RatFunc a_qfib_entry(int row, int col) {
    if (col < 0 || col > row || (row - col) % 2) return zero_rf();
    return RatFunc(a_qfib_closed((row - col) / 2, col));
}

RatFunc a_qfib_alt(int n, int k) {
    Poly diff = q_binom(2 * n + k, n) - q_binom(2 * n + k, n - 1);
    return RatFunc(diff, Poly::term(BigRat(1), q_pow(n)));
}

RatFunc a_fibtq_closed(int row, int col) {
    if (col < 0 || col > row || (row - col) % 2) return zero_rf();
    if (row % 2) {
        int n = (row - 1) / 2, k = (col - 1) / 2;
        Poly sum;
        for (int j = 0; j <= n - k; ++j) {
            Poly bracket = q_binom(n, j) * q_binom(n + 1, j + k + 1) -
                           q_binom(n + 1, j) * q_binom(n, j + k + 1);
            sum += bracket.times_monomial(q_pow(j * j + (k + 1) * j) * t_pow(j));
        }
        return RatFunc(sum, Poly::term(BigRat(1), q_pow(n - k)));
    }
    int n = row / 2, k = col / 2;
    Poly sum;
    for (int j = 0; j <= n - k; ++j) {
        Poly bracket = q_binom(n - 1, j) * q_binom(n + 1, j + k + 1) -
                       q_binom(n, j) * q_binom(n, j + k + 1);
        sum += bracket.times_monomial(q_pow(j * j + (k + 1) * j) * t_pow(j));
    }
    return RatFunc(sum, Poly::term(BigRat(1), q_pow(n - k)));
}

RatFunc table_ABDE(TableKind kind, int n, int k) {
    if (k < 0 || k > n || n < 0) return zero_rf();
    switch (kind) {
        case TableKind::A: {
            Poly sum;
            for (int j = 0; j <= n - k; ++j) {
                Poly bracket = q_binom(n - 1, j) * q_binom(n + 1, j + k + 1) -
                               q_binom(n, j) * q_binom(n, j + k + 1);
                sum += bracket.times_monomial(q_pow(j * j + (k + 1) * j) * t_pow(j));
            }
            return RatFunc(sum, Poly::term(BigRat(1), q_pow(n - k)));
        }
        case TableKind::B: {
            Poly sum;
            for (int j = 0; j <= n - k; ++j) {
                Poly bracket = q_binom(n, j) * q_binom(n + 1, k + j + 1) -
                               q_binom(n + 1, j) * q_binom(n, k + j + 1);
                sum += bracket.times_monomial(q_pow(j * j + j + k * j) * t_pow(j));
            }
            return RatFunc(sum, Poly::term(BigRat(1), q_pow(n - k)));
        }
        case TableKind::D: {
            Poly sum;
            for (int j = 0; j <= n - k; ++j) {
                Poly prod = q_binom(n, j) * q_binom(n, k + j);
                sum += prod.times_monomial(q_pow(j * (j + k)) * t_pow(j));
            }
            return RatFunc(sum);
        }
        case TableKind::E:
        default: {
            Poly sum;
            for (int j = 0; j <= n - k; ++j) {
                Poly prod = q_binom(n, k + j) * q_binom(n + 1, j);
                Poly halves = Poly::term(BigRat(1), q_pow(j * (j + k)) * t_pow(j)) +
                              Poly::term(BigRat(1), q_pow((n + 1 - j) * (n - j - k)) * t_pow(n + 1 - j));
                sum += prod * halves;
            }
            return RatFunc(sum, Poly(1) + Poly::var(Var::t, k + 1));
        }
    }
}

RatFunc b_alt(int n, int k) {
    if (k < 0 || k > n || n < 0) return zero_rf();
    Poly sum;
    for (int j = 0; j <= n - k; ++j) {
        Poly prod = q_binom(n + 1, j) * q_binom(n + 1, k + j + 1);
        sum += prod.times_monomial(q_pow(j * j + k * j) * t_pow(j));
    }
    return RatFunc(q_int(k + 1) * sum, q_int(n + 1));
}

RatFunc e_alt(int n, int k) {
    if (k < 0 || k > n || n < 0) return zero_rf();
    Poly sum;
    for (int j = 0; j <= n - k; ++j) {
        Poly prod = q_binom(n, k + j) * q_binom(n + 1, j);
        sum += prod.times_monomial(q_pow(j * (j + k)) * t_pow(j));
    }
    for (int j = k + 1; j <= n + 1; ++j) {
        Poly prod = q_binom(n, j - k - 1) * q_binom(n + 1, j);
        sum += prod.times_monomial(q_pow(j * (j - k - 1)) * t_pow(j));
    }
    return RatFunc(sum, Poly(1) + Poly::var(Var::t, k + 1));
}

RatFunc moment(MomentKind kind, int n) {
    if (n < 0) throw std::invalid_argument("moment: negative index");
    switch (kind) {
        case MomentKind::narayana: {
            if (n == 0) return RatFunc(1);
            std::vector<Poly::Term> terms;
            for (int k = 0; k < n; ++k) {
                BigRat c = binom(n, k) * binom(n, k + 1) / BigRat(n);
                terms.push_back({t_pow(k), c});
            }
            Poly p = Poly::from_terms(std::move(terms));
            if (!p.has_integer_coefficients())
                throw std::logic_error("moment: non-integer coefficient in a classical value");
            return RatFunc(p);
        }
        case MomentKind::q_narayana: {
            if (n == 0) return RatFunc(1);
            Poly sum;
            for (int j = 0; j < n; ++j) {
                Poly prod = q_binom(n, j) * q_binom(n, j + 1);
                sum += prod.times_monomial(q_pow(j * j + j) * t_pow(j));
            }
            return RatFunc(RatFunc(sum, q_int(n)).as_poly());
        }
        case MomentKind::q_catalan:
            return RatFunc((RatFunc(q_binom(2 * n, n)) / RatFunc(q_int(n + 1))).as_poly());
        case MomentKind::central_qbinom:
            return RatFunc(q_binom(2 * n, n));
        case MomentKind::typeB_M: {
            Poly sum;
            for (int j = 0; j <= n; ++j) {
                Poly b = q_binom(n, j);
                sum += (b * b).times_monomial(q_pow(j * j) * t_pow(j));
            }
            return RatFunc(sum);
        }
        case MomentKind::L1_odd: {
            Poly num = (Poly(1) + Poly::var(Var::q)) * moment(MomentKind::q_catalan, n + 1).num();
            Poly den = Poly(1) + Poly::var(Var::q, n + 1);
            return RatFunc(num, den);
        }
        case MomentKind::M1_odd:
        default: {
            RatFunc shifted = substitute(moment(MomentKind::typeB_M, n + 1), Var::t,
                                         RatFunc(Poly::var(Var::t), Poly::var(Var::q)));
            return shifted / RatFunc(Poly(1) + Poly::var(Var::t));
        }
    }
}

MomentKind moment_kind_from_name(const std::string& name) {
    for (std::size_t i = 0; i < moment_kind_names().size(); ++i)
        if (moment_kind_names()[i] == name) return static_cast<MomentKind>(i);
    std::ostringstream os;
    os << "unknown moment '" << name << "'; valid names:";
    for (const auto& n : moment_kind_names()) os << " " << n;
    throw std::invalid_argument(os.str());
}

const std::vector<std::string>& moment_kind_names() {
    static const std::vector<std::string> names = {
        "narayana", "q_narayana", "q_catalan", "central_qbinom", "typeB_M", "L1_odd", "M1_odd"};
    return names;
}

namespace {

struct CheckScope {
    VerificationReport rep;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    CheckScope(std::string id, std::string title, std::string range) {
        rep.id = std::move(id);
        rep.title = std::move(title);
        rep.range = std::move(range);
    }
    void expect(const RatFunc& lhs, const RatFunc& rhs, const std::string& where) {
        if (!rep.pass) return;
        if (!lhs.equals(rhs)) {
            RatFunc diff = lhs - rhs;
            rep.fail({where, to_text(lhs), to_text(rhs), to_text(diff)});
        }
    }
    VerificationReport done() {
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
};

} // namespace

VerificationReport catalan_stieltjes_check(int N, Mutation mutation) {
    CheckScope s("eq3.43", "Catalan-Stieltjes row recurrences of the D table",
                 "1 <= n <= " + std::to_string(N));
    RatFunc qt(Poly::term(BigRat(1), q_pow(1) * t_pow(1)));
    for (int n = 1; n <= N && s.rep.pass; ++n) {
        // column 0
        RatFunc lhs = table_ABDE(TableKind::D, n, 0);
        Poly w0 = Poly(1) + Poly::term(BigRat(1), q_pow(n) * t_pow(1));
        Poly w1 = (Poly(1) + Poly::var(Var::q, n)).times_monomial(q_pow(1) * t_pow(1));
        RatFunc rhs = RatFunc(w0) * substitute(table_ABDE(TableKind::D, n - 1, 0), Var::t, qt) +
                      RatFunc(w1) * substitute(table_ABDE(TableKind::D, n - 1, 1), Var::t, qt);
        s.expect(lhs, rhs, "n=" + std::to_string(n) + ", k=0");
        // interior columns
        for (int k = 1; k <= n && s.rep.pass; ++k) {
            RatFunc l = table_ABDE(TableKind::D, n, k);
            Poly mid = (Poly(1) + Poly::term(BigRat(1), q_pow(n) * t_pow(1))).times_monomial(q_pow(k));
            Monomial tail_w = mutation == Mutation::stieltjes_drop_q_factor
                                  ? t_pow(1)
                                  : q_pow(n + 2 * k + 1) * t_pow(1);
            RatFunc r = substitute(table_ABDE(TableKind::D, n - 1, k - 1), Var::t, qt) +
                        RatFunc(mid) * substitute(table_ABDE(TableKind::D, n - 1, k), Var::t, qt) +
                        RatFunc(Poly::term(BigRat(1), tail_w)) *
                            substitute(table_ABDE(TableKind::D, n - 1, k + 1), Var::t, qt);
            s.expect(l, r, "n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
    return s.done();
}

VerificationReport b_d_relation_check(int N, Mutation mutation) {
    CheckScope s("eq3.31", "B from D by the shifted column relation, plus its bracket identity",
                 "0 <= k <= n <= " + std::to_string(N));
    for (int n = 0; n <= N && s.rep.pass; ++n) {
        for (int k = 0; k <= n && s.rep.pass; ++k) {
            std::uint32_t e = mutation == Mutation::bd_wrong_q_power ? 2 * k + 1 : 2 * k + 2;
            RatFunc rhs = table_ABDE(TableKind::D, n, k) -
                          RatFunc(Poly::term(BigRat(1), q_pow(e) * t_pow(1))) *
                              table_ABDE(TableKind::D, n, k + 2);
            s.expect(table_ABDE(TableKind::B, n, k), rhs,
                     "n=" + std::to_string(n) + ", k=" + std::to_string(k));
            for (int j = 0; j <= n + 1 && s.rep.pass; ++j) {
                RatFunc lhs = RatFunc(q_int(k + 1) * q_binom(n + 1, j) * q_binom(n + 1, k + j + 1),
                                      q_int(n + 1));
                RatFunc r = RatFunc(q_binom(n, j) * q_binom(n, k + j)) -
                            RatFunc((q_binom(n, j - 1) * q_binom(n, k + j + 1))
                                        .times_monomial(q_pow(k + 1)));
                s.expect(lhs, r,
                         "bracket n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                             ", j=" + std::to_string(j));
            }
        }
    }
    return s.done();
}

} // namespace qmoments
