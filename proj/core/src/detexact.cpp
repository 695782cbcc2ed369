#include "qmoments/detexact.hpp"

#include <stdexcept>

namespace qmoments {

RatFunc det_exact(const Matrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_exact: matrix not square");
    if (n == 0) return RatFunc(1);

    // Clear denominators: row i is scaled by the product of its
    // denominators, which multiplies the determinant by that product.
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    Poly cleared(1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Poly> prefix(n + 1, Poly(1)), suffix(n + 1, Poly(1));
        for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * m[i][j].den();
        for (std::size_t j = n; j > 0; --j) suffix[j - 1] = suffix[j] * m[i][j - 1].den();
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].num() * (prefix[j] * suffix[j + 1]);
        cleared *= prefix[n];
    }

    // Fraction-free elimination: every intermediate entry is a minor of
    // the cleared matrix, so the division by the previous pivot is exact.
    int sign = 1;
    Poly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return RatFunc(0);
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto quot = num.divided_exactly(prev);
                if (!quot) throw std::logic_error("det_exact: Bareiss division not exact");
                a[i][j] = std::move(*quot);
            }
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }

    Poly det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return RatFunc(std::move(det), std::move(cleared));
}

} // namespace qmoments
