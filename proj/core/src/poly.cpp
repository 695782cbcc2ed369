#include "qmoments/poly.hpp"

#include <algorithm>
#include <map>

namespace qmoments {

Poly::Poly(const BigRat& c) {
    if (!c.is_zero()) terms_.push_back({Monomial::one(), c});
}

Poly Poly::var(Var v, std::uint32_t e) {
    return term(BigRat(1), Monomial::var(v, e));
}

Poly Poly::term(const BigRat& c, const Monomial& m) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_less(a.mono, b.mono); });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

const Poly::Term& Poly::leading() const {
    if (terms_.empty()) throw std::domain_error("Poly: leading term of zero");
    return terms_.back();
}

BigRat Poly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return mono_less(t.mono, k); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return BigRat(0);
}

std::uint32_t Poly::degree(Var v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exp(v));
    return d;
}

bool Poly::depends_on(Var v) const {
    for (const auto& t : terms_)
        if (t.mono.exp(v) > 0) return true;
    return false;
}

Monomial Poly::content() const {
    if (terms_.empty()) return Monomial::one();
    Monomial g = terms_[0].mono;
    for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
    return g;
}

Poly Poly::coeff_of(Var v, std::uint32_t k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.exp(v) == k) {
            Monomial m = t.mono;
            m.set(v, 0);
            out.push_back({m, t.coeff});
        }
    }
    return from_terms(std::move(out));
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

// Merge of two canonically sorted term lists.
static std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                           const std::vector<Poly::Term>& b, bool negate_b) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].mono == b[j].mono) {
            BigRat c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
            ++i, ++j;
        } else if (mono_less(a[i].mono, b[j].mono)) {
            out.push_back(a[i]);
            ++i;
        } else {
            out.push_back({b[j].mono, negate_b ? -b[j].coeff : b[j].coeff});
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, negate_b ? -b[j].coeff : b[j].coeff});
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    return r += b;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    return r -= b;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::map<Monomial, BigRat, MonoLess> acc;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mono * tb.mono;
            auto [it, fresh] = acc.try_emplace(m, ta.coeff * tb.coeff);
            if (!fresh) it->second += ta.coeff * tb.coeff;
        }
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    return r;
}

Poly Poly::scaled(const BigRat& c) const {
    if (c.is_zero()) return Poly();
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Poly Poly::times_monomial(const Monomial& m) const {
    Poly p = *this;
    for (auto& t : p.terms_) t.mono = t.mono * m;
    return p;
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
    Poly p = *this;
    for (auto& t : p.terms_) t.mono = t.mono / m;
    return p;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

std::optional<Poly> Poly::divided_exactly(const Poly& d, Poly* remainder_out) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly quot;
    Poly rem = *this;
    const Term& lead_d = d.leading();
    while (!rem.is_zero()) {
        const Term& lead_r = rem.leading();
        if (!lead_d.mono.divides(lead_r.mono)) {
            if (remainder_out) *remainder_out = rem;
            return std::nullopt;
        }
        Poly s = term(lead_r.coeff / lead_d.coeff, lead_r.mono / lead_d.mono);
        quot += s;
        rem -= s * d;
    }
    return quot;
}

bool Poly::has_integer_coefficients() const {
    for (const auto& t : terms_)
        if (!t.coeff.is_integer()) return false;
    return true;
}

} // namespace qmoments
