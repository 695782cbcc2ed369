#include "qmoments/qcore.hpp"

#include <stdexcept>

namespace qmoments {

Poly q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int: negative index");
    std::vector<Poly::Term> terms;
    for (int i = 0; i < n; ++i) terms.push_back({Monomial::var(Var::q, i), BigRat(1)});
    return Poly::from_terms(std::move(terms));
}

Poly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative index");
    Poly r(1);
    for (int i = 1; i <= n; ++i) r *= q_int(i);
    return r;
}

Poly q_pochhammer(int n) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: negative index");
    Poly r(1);
    for (int i = 1; i <= n; ++i) r *= Poly(1) - Poly::var(Var::q, i);
    return r;
}

Poly QBinomTable::get(int n, int k) {
    if (k < 0) return Poly();
    if (k == 0) return Poly(1);
    if (n < 0) throw std::invalid_argument("q_binom: negative top with k > 0");
    if (k > n) return Poly();

    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) <= n) {
        int m = static_cast<int>(rows_.size());
        std::vector<Poly> row(m + 1);
        row[0] = Poly(1);
        row[m] = Poly(1);
        for (int j = 1; j < m; ++j) {
            // [m, j] = [m-1, j-1] + q^j [m-1, j]
            row[j] = rows_[m - 1][j - 1] +
                     rows_[m - 1][j].times_monomial(Monomial::var(Var::q, j));
        }
        rows_.push_back(std::move(row));
    }
    return rows_[n][k];
}

Poly q_binom(int n, int k) {
    static QBinomTable table;
    return table.get(n, k);
}

static Monomial q_power(std::uint32_t e) {
    return Monomial::var(Var::q, e);
}

Poly carlitz_c(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("carlitz_c: requires 0 <= k <= n");
    Poly sum;
    int jmax = std::min(k, n - k);
    for (int j = 0; j <= jmax; ++j) {
        Poly term = q_binom(k, j) * q_binom(n - j, k);
        term = term.times_monomial(q_power(j * (j + 1) / 2));
        if (j % 2) term = -term;
        sum += term;
    }
    return sum;
}

std::pair<Poly, Poly> vandermonde_sums(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("vandermonde_sums: requires 0 <= k <= n");
    Poly first, second;
    for (int j = 0; j <= k; ++j) {
        Poly outer = q_binom(n - j, k - j).times_monomial(q_power((n - k + 1) * j));
        first += outer * q_binom(n - k + j - 1, j);
        second += outer * q_binom(n - k + j, j);
    }
    return {first, second};
}

// (1/q^k)([n,k] - [n,k-1]); the difference is divisible by q^k.
static Poly carlitz_weight(int n, int k) {
    Poly diff = q_binom(n, k) - q_binom(n, k - 1);
    return diff.divided_by_monomial(q_power(k));
}

std::vector<Poly> carlitz_inversion(std::span<const Poly> seq, InvDirection direction) {
    std::vector<Poly> out(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        Poly acc;
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            const Poly& s = seq[n - 2 * k];
            if (direction == InvDirection::forward) {
                acc += carlitz_weight(static_cast<int>(n), static_cast<int>(k)) * s;
            } else {
                Poly w = q_binom(static_cast<int>(n - k), static_cast<int>(k))
                             .times_monomial(q_power(static_cast<std::uint32_t>(k * (k - 1) / 2)));
                acc += (k % 2) ? -(w * s) : w * s;
            }
        }
        out[n] = std::move(acc);
    }
    return out;
}

} // namespace qmoments
