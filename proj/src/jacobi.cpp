#include "eigraph/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eigraph {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
}

} // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double threshold_scale, int max_sweeps) {
    if (a.size() != n * n) throw std::invalid_argument("matrix shape mismatch");
    if (n == 0) return {};

    double frob = 0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double threshold = threshold_scale * std::max(frob, 1.0);

    bool converged = off_diagonal_norm(a, n) <= threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= threshold / (n * n)) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2 * apq);
                // Smaller-angle root of t^2 + 2 theta t - 1 = 0.
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                const double tau = s / (1 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0;
                a[q * n + p] = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = aip - s * (aiq + tau * aip);
                    a[p * n + i] = a[i * n + p];
                    a[i * n + q] = aiq + s * (aip - tau * aiq);
                    a[q * n + i] = a[i * n + q];
                }
            }
        }
        converged = off_diagonal_norm(a, n) <= threshold;
    }
    if (!converged)
        throw std::runtime_error("jacobi eigensolver failed to converge");

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

} // namespace eigraph
