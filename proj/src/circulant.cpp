#include "eigraph/circulant.hpp"

#include <cmath>
#include <stdexcept>

namespace eigraph {

std::vector<double> circulant_matrix(double a, double b, std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty circulant matrix");
    std::vector<double> m(n * n, b);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = a;
    return m;
}

double circulant_det(double a, double b, std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty circulant matrix");
    return (a + (n - 1) * b) * std::pow(a - b, static_cast<double>(n - 1));
}

std::vector<double> circulant_inverse(double a, double b, std::size_t n) {
    const double det = circulant_det(a, b, n);
    if (det == 0 || !std::isfinite(1 / det))
        throw std::invalid_argument("singular circulant matrix");
    if (n == 1) return {1 / a};
    const double diag = (a + (n - 2) * b) * std::pow(a - b, static_cast<double>(n - 2));
    const double off = -b * std::pow(a - b, static_cast<double>(n - 2));
    std::vector<double> inv(n * n, off / det);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = diag / det;
    return inv;
}

} // namespace eigraph
