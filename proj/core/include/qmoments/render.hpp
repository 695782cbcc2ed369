#pragma once

#include <string>

#include "qmoments/ratfunc.hpp"

namespace qmoments {

enum class TextStyle { plain, latex };

std::string to_text(const BigRat& c);
std::string to_text(const Monomial& m, TextStyle style = TextStyle::plain);

/// Flat rendering in canonical ascending term order, e.g. "1 + q^2 t".
std::string to_text(const Poly& p, TextStyle style = TextStyle::plain);

/// "(num)/(den)" (or \frac in latex); bare numerator when den == 1.
std::string to_text(const RatFunc& f, TextStyle style = TextStyle::plain);

/// Grouped by descending powers of x, e.g. "x^4 - (1+q+q^2) x^2 + q".
/// Requires the denominator to be free of x.
std::string to_text_by_x(const RatFunc& f, TextStyle style = TextStyle::plain);

} // namespace qmoments
