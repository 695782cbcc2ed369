#include "qmoments/ratfunc.hpp"

#include "qmoments/render.hpp"

namespace qmoments {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Monomial g = Monomial::gcd(num_.content(), den_.content());
    if (!g.is_one()) {
        num_ = num_.divided_by_monomial(g);
        den_ = den_.divided_by_monomial(g);
    }
    const BigRat& lc = den_.leading().coeff;
    if (!lc.is_one()) {
        BigRat inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Poly RatFunc::as_poly() const {
    if (den_.is_one()) return num_;
    Poly rem;
    auto quot = num_.divided_exactly(den_, &rem);
    if (!quot)
        throw std::domain_error("RatFunc: non-exact division, remainder " + to_text(rem));
    return *quot;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw std::domain_error("RatFunc: reciprocal of zero");
    return RatFunc(den_, num_);
}

bool RatFunc::equals(const RatFunc& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

RatFunc arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        default: return a / b;
    }
}

RatFunc substitute(const Poly& p, Var v, const RatFunc& value) {
    if (!p.depends_on(v)) return RatFunc(p);
    // Horner over descending powers of v.
    RatFunc acc;
    std::uint32_t top = p.degree(v);
    for (std::int64_t k = top; k >= 0; --k) {
        Poly c = p.coeff_of(v, static_cast<std::uint32_t>(k));
        if (static_cast<std::uint32_t>(k) == top)
            acc = RatFunc(c);
        else
            acc = acc * value + RatFunc(c);
    }
    return acc;
}

RatFunc substitute(const RatFunc& f, Var v, const RatFunc& value) {
    RatFunc n = substitute(f.num(), v, value);
    RatFunc d = substitute(f.den(), v, value);
    if (d.is_zero())
        throw std::domain_error("substitute: denominator vanishes identically after substitution");
    return n / d;
}

Poly substitute_poly(const Poly& p, Var v, const Poly& value) {
    return substitute(p, v, RatFunc(value)).as_poly();
}

RatFunc coeff_of(const RatFunc& f, Var v, std::uint32_t k) {
    if (f.den().depends_on(v))
        throw std::domain_error("coeff_of: denominator depends on the extraction variable");
    return RatFunc(f.num().coeff_of(v, k), f.den());
}

} // namespace qmoments
