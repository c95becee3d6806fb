#pragma once

#include <cstddef>
#include <vector>

namespace eigraph {

// Eigenvalues of a dense real symmetric matrix (row-major) by cyclic Jacobi
// rotations.  Sweeps run until the off-diagonal Frobenius mass drops below
// threshold_scale * ||A||_F; throws std::runtime_error if max_sweeps pass
// without convergence.  Result sorted descending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double threshold_scale = 1e-12,
                                       int max_sweeps = 100);

} // namespace eigraph
