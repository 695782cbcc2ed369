#include "qmoments/render.hpp"

#include <sstream>

namespace qmoments {

std::string to_text(const BigRat& c) {
    return c.str();
}

static void append_var(std::ostringstream& os, const char* name, std::uint32_t e, TextStyle style,
                       bool& first) {
    if (e == 0) return;
    if (!first) os << " ";
    first = false;
    os << name;
    if (e > 1) {
        if (style == TextStyle::latex)
            os << "^{" << e << "}";
        else
            os << "^" << e;
    }
}

std::string to_text(const Monomial& m, TextStyle style) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    append_var(os, "q", m.eq, style, first);
    append_var(os, "t", m.et, style, first);
    append_var(os, "x", m.ex, style, first);
    return os.str();
}

// One unsigned term, e.g. "3/2 q^2 t". The sign is emitted by the caller.
static std::string term_body(const Poly::Term& t, TextStyle style) {
    BigRat c = t.coeff.abs();
    if (t.mono.is_one()) return to_text(c);
    std::string mono = to_text(t.mono, style);
    if (c.is_one()) return mono;
    return to_text(c) + (style == TextStyle::latex ? " \\, " : " ") + mono;
}

// Flat form; tight mode drops the spaces around + and - for use inside
// parenthesized coefficients ("(1+q+q^2)").
static std::string poly_text(const Poly& p, TextStyle style, bool tight) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (first) {
            if (t.coeff.sign() < 0) os << "-";
            first = false;
        } else {
            if (tight)
                os << (t.coeff.sign() < 0 ? "-" : "+");
            else
                os << (t.coeff.sign() < 0 ? " - " : " + ");
        }
        os << term_body(t, style);
    }
    return os.str();
}

std::string to_text(const Poly& p, TextStyle style) {
    return poly_text(p, style, false);
}

std::string to_text(const RatFunc& f, TextStyle style) {
    if (f.is_poly()) return to_text(f.num(), style);
    if (style == TextStyle::latex)
        return "\\frac{" + to_text(f.num(), style) + "}{" + to_text(f.den(), style) + "}";
    return "(" + poly_text(f.num(), style, true) + ")/(" + poly_text(f.den(), style, true) + ")";
}

// Coefficient of one x-power inside the grouped form. Multi-term
// coefficients are parenthesized and rendered tight.
static void append_grouped_coeff(std::ostringstream& os, const Poly& c, std::uint32_t xe,
                                 TextStyle style, bool first) {
    bool negative = false;
    Poly body = c;
    // Factor a global minus out of all-negative coefficients so the
    // grouped form reads "- (1+q) x^2" rather than "+ (-1-q) x^2".
    bool all_neg = true;
    for (const auto& t : c.terms()) all_neg = all_neg && t.coeff.sign() < 0;
    if (all_neg) {
        negative = true;
        body = -c;
    }
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");

    std::string coeff_text;
    bool unit = body.is_one();
    if (!unit) {
        coeff_text = poly_text(body, style, body.term_count() > 1);
        if (body.term_count() > 1) coeff_text = "(" + coeff_text + ")";
    }
    if (xe == 0) {
        os << (unit ? "1" : coeff_text);
        return;
    }
    if (!unit) os << coeff_text << " ";
    os << "x";
    if (xe > 1)
        os << (style == TextStyle::latex ? "^{" + std::to_string(xe) + "}"
                                         : "^" + std::to_string(xe));
}

std::string to_text_by_x(const RatFunc& f, TextStyle style) {
    if (f.den().depends_on(Var::x))
        throw std::domain_error("to_text_by_x: denominator depends on x");
    if (f.num().is_zero()) return "0";

    std::ostringstream os;
    bool first = true;
    for (std::int64_t k = f.num().degree(Var::x); k >= 0; --k) {
        Poly ck = f.num().coeff_of(Var::x, static_cast<std::uint32_t>(k));
        if (ck.is_zero()) continue;
        RatFunc coeff(ck, f.den());
        // display-only simplification of exactly clearing coefficients
        std::optional<Poly> cleared;
        if (coeff.is_poly()) {
            cleared = coeff.num();
        } else if (auto quot = coeff.num().divided_exactly(coeff.den())) {
            cleared = std::move(*quot);
        }
        if (cleared) {
            append_grouped_coeff(os, *cleared, static_cast<std::uint32_t>(k), style, first);
        } else {
            if (!first) os << " + ";
            if (style == TextStyle::latex)
                os << to_text(coeff, style);
            else
                os << "(" + to_text(coeff, style) + ")";
            if (k > 0) {
                os << " x";
                if (k > 1)
                    os << (style == TextStyle::latex ? "^{" + std::to_string(k) + "}"
                                                     : "^" + std::to_string(k));
            }
        }
        first = false;
    }
    return os.str();
}

} // namespace qmoments
