#pragma once

#include <vector>

#include "qmoments/ratfunc.hpp"

namespace qmoments {

using Matrix = std::vector<std::vector<RatFunc>>;

/// Exact determinant over the fraction field. Denominators are cleared
/// row by row, the polynomial core is eliminated fraction-free (Bareiss,
/// with row pivoting on nonzero entries), and the cleared factor is put
/// back at the end. Singular matrices return 0.
RatFunc det_exact(const Matrix& m);

} // namespace qmoments
