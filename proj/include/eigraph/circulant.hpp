#pragma once

#include <cstddef>
#include <vector>

namespace eigraph {

// C(a,b,n): a on the diagonal, b everywhere else.
std::vector<double> circulant_matrix(double a, double b, std::size_t n);

// det C(a,b,n) = (a+(n-1)b)(a-b)^{n-1}.
double circulant_det(double a, double b, std::size_t n);

// Closed-form inverse: diagonal (a+(n-2)b)(a-b)^{n-2}/det, off-diagonal
// -b(a-b)^{n-2}/det.  Throws std::invalid_argument when singular.
std::vector<double> circulant_inverse(double a, double b, std::size_t n);

} // namespace eigraph
