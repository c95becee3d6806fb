#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigraph/graph.hpp"
#include "eigraph/poly.hpp"

namespace eigraph {

struct SpectralLine {
    double value = 0;
    std::size_t multiplicity = 0;
    std::string symbol; // exact form when known, empty for purely numeric
};

struct Spectrum {
    std::vector<SpectralLine> entries; // values strictly descending

    std::size_t total_multiplicity() const;
    std::vector<double> expand() const; // one value per eigenvalue, descending
};

// Collapses a full eigenvalue list into multiplicity groups; consecutive
// values closer than tol (absolute) join the same group, which is reported
// at the group mean.
Spectrum cluster_eigenvalues(std::vector<double> values, double tol = 1e-9);

Spectrum eigenvalues_numeric(const IdealGraph& g, double tol = 1e-9);

double spectrum_energy(const Spectrum& s);

// Strictly above the complete-graph energy 2(N-1), with a 1e-9 guard so
// exact equality (complete graphs themselves) stays false.
bool is_hyperenergetic(const Spectrum& s);

std::size_t numeric_zero_multiplicity(const Spectrum& s, double zero_tol = 1e-7);

// Kernel dimension of the adjacency matrix over the rationals; fraction-free
// elimination, no floating point.
std::size_t nullity_exact(const IdealGraph& g);

// True when 0 is an eigenvalue: everything except prime powers p^m with
// m > 2 and squarefree n.
bool zero_eigenvalue_predicted(const FactoredInteger& f);

IntPoly char_poly_exact(const IdealGraph& g, std::size_t cap = 64);

// The cubic factor for n = p^{m1} q^{m2}:
// lambda^3 + (2 - m1 m2) lambda^2 + [(1 - m1 m2)(m1 + m2) - m1 m2] lambda
//   - m1^2 m2^2.
IntPoly two_prime_cubic(int m1, int m2);

// Monic char poly of the two-prime family:
// lambda^{m1+m2-2} (lambda+1)^{m1 m2 - 2} * cubic.  At m1 = m2 = 1 the
// (lambda+1) exponent is -1; the cubic is divided by (lambda+1) exactly.
IntPoly two_prime_charpoly(int m1, int m2);

// Real roots of a cubic, ascending, each refined to about tol by bisection
// inside sign-change brackets plus Newton polishing.
std::vector<double> cubic_real_roots(const IntPoly& cubic, double tol = 1e-12);

// Closed-form spectrum for the covered families: p^m, p^{m1}q^{m2} (exact
// surds when m1 = m2, numeric cubic roots otherwise), and squarefree n with
// three or four primes.  nullopt for anything else.
std::optional<Spectrum> closed_form_spectrum(const FactoredInteger& f);

// Same groups, same multiplicities, values within tol.
bool spectra_match(const Spectrum& a, const Spectrum& b, double tol = 1e-8);

// Copies symbols of b onto the matching groups of a.
void adopt_symbols(Spectrum& a, const Spectrum& b, double tol = 1e-8);

} // namespace eigraph
