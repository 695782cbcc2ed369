#pragma once

#include "qmoments/poly.hpp"

namespace qmoments {

/// Quotient of two Poly values, the ambient field for everything with
/// negative q-powers, t/q arguments or genuinely rational coefficients.
///
/// Normal form is deliberately weak: the pair is reduced by its common
/// monomial content and the denominator is scaled monic (leading
/// coefficient 1, hence positive). There is no polynomial GCD; equality
/// is decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const BigRat& c) : num_(c), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    /// Exact quotient num/den; throws std::domain_error naming the
    /// remainder when the division is not exact.
    Poly as_poly() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc reciprocal() const;

    /// Cross-multiplication equality: a.num * b.den == b.num * a.den.
    bool equals(const RatFunc& o) const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.equals(b); }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !a.equals(b); }

private:
    void normalize();
    Poly num_;
    Poly den_;
};

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of field arithmetic, mirroring the CLI/verification surface.
RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op);

/// Replaces every occurrence of v in p by value, by Horner accumulation
/// over the powers of v. Exact; lands in the fraction field.
RatFunc substitute(const Poly& p, Var v, const RatFunc& value);

/// Same for a quotient; throws std::domain_error when the substituted
/// denominator vanishes identically.
RatFunc substitute(const RatFunc& f, Var v, const RatFunc& value);

/// Substitution that must stay polynomial (value itself a Poly).
Poly substitute_poly(const Poly& p, Var v, const Poly& value);

/// Coefficient of v^k; requires den free of v.
RatFunc coeff_of(const RatFunc& f, Var v, std::uint32_t k);

} // namespace qmoments
