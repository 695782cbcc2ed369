#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmoments/bigrat.hpp"
#include "qmoments/monomial.hpp"

namespace qmoments {

/// Sparse multivariate polynomial in q, t, x over BigRat.
///
/// Terms are stored with nonzero coefficients only, ascending in the
/// canonical graded-lex order (leading term last). Values are immutable
/// after construction in the sense that all operations return new objects.
class Poly {
public:
    struct Term {
        Monomial mono;
        BigRat coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(long c) : Poly(BigRat(c)) {}
    Poly(const BigRat& c);

    static Poly var(Var v, std::uint32_t e = 1);
    static Poly term(const BigRat& c, const Monomial& m);
    /// Sorts, merges duplicates, drops zeros.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Leading (maximal) term; polynomial must be nonzero.
    const Term& leading() const;

    BigRat coeff(const Monomial& m) const;
    std::uint32_t degree(Var v) const;
    bool depends_on(Var v) const;
    /// Componentwise minimum of all exponent vectors (the monomial content).
    Monomial content() const;

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coeff_of(Var v, std::uint32_t k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const BigRat& c) const;
    Poly times_monomial(const Monomial& m) const;
    /// Componentwise exponent subtraction; every term must be divisible.
    Poly divided_by_monomial(const Monomial& m) const;
    Poly pow(std::uint32_t e) const;

    /// Exact quotient this / d, or nullopt when the division leaves a
    /// remainder. With remainder_out set, the offending remainder is
    /// reported for diagnostics.
    std::optional<Poly> divided_exactly(const Poly& d, Poly* remainder_out = nullptr) const;

    bool has_integer_coefficients() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<Term> terms_;
};

} // namespace qmoments
