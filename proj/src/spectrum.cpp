#include "eigraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eigraph/exact.hpp"
#include "eigraph/jacobi.hpp"

namespace eigraph {

namespace {

// Largest square factor: d = outer^2 * inner with inner squarefree.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t d) {
    std::uint64_t outer = 1;
    for (std::uint64_t f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            outer *= f;
        }
    }
    return {outer, d};
}

// Display string for (p + c*sqrt(d))/q with q in {1,2}.
std::string surd_string(std::int64_t p, std::int64_t c, std::uint64_t d,
                        std::int64_t q) {
    auto [outer, inner] = split_square(d);
    c *= static_cast<std::int64_t>(outer);
    std::ostringstream out;
    if (inner == 1) {
        std::int64_t num = p + c;
        if (q == 1 || num % q == 0) out << num / q;
        else out << num << "/" << q;
        return out.str();
    }
    if (q == 2 && p % 2 == 0 && c % 2 == 0) {
        p /= 2;
        c /= 2;
        q = 1;
    }
    std::ostringstream term;
    if (p != 0) term << p << (c < 0 ? "-" : "+");
    else if (c < 0) term << "-";
    std::int64_t ca = c < 0 ? -c : c;
    if (ca != 1) term << ca << "*";
    term << "sqrt(" << inner << ")";
    if (q == 1) return term.str();
    out << "(" << term.str() << ")/" << q;
    return out.str();
}

void push_line(std::vector<SpectralLine>& v, double value, std::size_t mult,
               std::string symbol) {
    if (mult == 0) return;
    v.push_back({value, mult, std::move(symbol)});
}

Spectrum finish(std::vector<SpectralLine> lines) {
    std::sort(lines.begin(), lines.end(),
              [](const SpectralLine& a, const SpectralLine& b) {
                  return a.value > b.value;
              });
    return Spectrum{std::move(lines)};
}

} // namespace

std::size_t Spectrum::total_multiplicity() const {
    std::size_t t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

std::vector<double> Spectrum::expand() const {
    std::vector<double> v;
    v.reserve(total_multiplicity());
    for (const auto& e : entries)
        for (std::size_t i = 0; i < e.multiplicity; ++i) v.push_back(e.value);
    return v;
}

Spectrum cluster_eigenvalues(std::vector<double> values, double tol) {
    if (values.empty()) throw std::invalid_argument("empty eigenvalue list");
    std::sort(values.begin(), values.end(), std::greater<double>());
    Spectrum s;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values[i - 1] - values[i] >= tol) {
            double sum = 0;
            for (std::size_t j = start; j < i; ++j) sum += values[j];
            s.entries.push_back({sum / (i - start), i - start, ""});
            start = i;
        }
    }
    return s;
}

Spectrum eigenvalues_numeric(const IdealGraph& g, double tol) {
    return cluster_eigenvalues(
        jacobi_eigenvalues(g.adjacency_matrix(), g.vertex_count()), tol);
}

double spectrum_energy(const Spectrum& s) {
    double e = 0;
    for (const auto& line : s.entries)
        e += line.multiplicity * std::abs(line.value);
    return e;
}

bool is_hyperenergetic(const Spectrum& s) {
    const std::size_t n = s.total_multiplicity();
    return spectrum_energy(s) > 2.0 * (n - 1) + 1e-9;
}

std::size_t numeric_zero_multiplicity(const Spectrum& s, double zero_tol) {
    std::size_t m = 0;
    for (const auto& line : s.entries)
        if (std::abs(line.value) < zero_tol) m += line.multiplicity;
    return m;
}

std::size_t nullity_exact(const IdealGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<BigInt> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = g.edge(i, j) ? 1 : 0;
    return n - matrix_rank_exact(std::move(a), n, n);
}

bool zero_eigenvalue_predicted(const FactoredInteger& f) {
    const bool prime_power_big = f.prime_count() == 1 && f.exponents()[0] > 2;
    return !(prime_power_big || f.squarefree());
}

IntPoly char_poly_exact(const IdealGraph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap) {
        std::ostringstream msg;
        msg << "exact char poly capped at " << cap << " vertices ("
            << n << " needed); use the numeric path";
        throw std::invalid_argument(msg.str());
    }
    std::vector<std::int64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = g.edge(i, j) ? 1 : 0;
    return char_poly_matrix(a, n);
}

IntPoly two_prime_cubic(int m1, int m2) {
    if (m1 < 1 || m2 < 1) throw std::invalid_argument("exponents must be >= 1");
    const std::int64_t a = static_cast<std::int64_t>(m1) * m2;
    const std::int64_t s = static_cast<std::int64_t>(m1) + m2;
    return IntPoly{-a * a, (1 - a) * s - a, 2 - a, 1};
}

IntPoly two_prime_charpoly(int m1, int m2) {
    const std::int64_t a = static_cast<std::int64_t>(m1) * m2;
    IntPoly cubic = two_prime_cubic(m1, m2);
    if (a == 1) return poly_divide_exact(cubic, IntPoly{1, 1});
    IntPoly p = poly_mul(poly_pow(IntPoly{0, 1}, static_cast<unsigned>(m1 + m2 - 2)),
                         poly_pow(IntPoly{1, 1}, static_cast<unsigned>(a - 2)));
    return poly_mul(p, cubic);
}

std::vector<double> cubic_real_roots(const IntPoly& cubic, double tol) {
    IntPoly p = cubic;
    poly_trim(p);
    if (poly_degree(p) != 3) throw std::invalid_argument("cubic expected");
    const double c3 = p[3].convert_to<double>();
    const double c2 = p[2].convert_to<double>() / c3;
    const double c1 = p[1].convert_to<double>() / c3;
    const double c0 = p[0].convert_to<double>() / c3;
    auto eval = [&](double x) { return ((x + c2) * x + c1) * x + c0; };
    auto deriv = [&](double x) { return (3 * x + 2 * c2) * x + c1; };

    const double bound =
        1 + std::max({std::abs(c2), std::abs(c1), std::abs(c0)});
    std::vector<double> nodes{-bound};
    const double disc = c2 * c2 - 3 * c1;
    if (disc > 0) {
        nodes.push_back((-c2 - std::sqrt(disc)) / 3);
        nodes.push_back((-c2 + std::sqrt(disc)) / 3);
    }
    nodes.push_back(bound);

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        double lo = nodes[i], hi = nodes[i + 1];
        double flo = eval(lo), fhi = eval(hi);
        if (flo == 0) {
            if (roots.empty() || std::abs(roots.back() - lo) > tol)
                roots.push_back(lo);
            continue;
        }
        if (flo * fhi > 0) continue;
        for (int it = 0; it < 200 && hi - lo > tol / 4; ++it) {
            double mid = (lo + hi) / 2;
            double fm = eval(mid);
            if (fm == 0) {
                lo = hi = mid;
                break;
            }
            (flo * fm < 0 ? hi : lo) = mid;
            if (flo * fm >= 0) flo = fm;
        }
        double x = (lo + hi) / 2;
        for (int it = 0; it < 4; ++it) {
            double d = deriv(x);
            if (d == 0) break;
            double step = eval(x) / d;
            double next = x - step;
            if (next < nodes[i] || next > nodes[i + 1]) break;
            x = next;
        }
        roots.push_back(x);
    }
    // A critical point sitting exactly on the axis is a double root.
    if (disc > 0 && roots.size() < 3) {
        for (std::size_t j = 1; j + 1 < nodes.size(); ++j) {
            if (std::abs(eval(nodes[j])) < tol) {
                roots.push_back(nodes[j]);
                if (roots.size() < 3 && std::abs(deriv(nodes[j])) < tol)
                    roots.push_back(nodes[j]);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<Spectrum> closed_form_spectrum(const FactoredInteger& f) {
    const int k = f.prime_count();
    std::vector<SpectralLine> lines;

    if (k == 1) {
        const int m = f.exponents()[0];
        if (m == 2) {
            push_line(lines, 0, 1, "0");
            return finish(std::move(lines));
        }
        push_line(lines, m - 2, 1, std::to_string(m - 2));
        push_line(lines, -1, static_cast<std::size_t>(m - 2), "-1");
        return finish(std::move(lines));
    }

    if (k == 2) {
        const int m1 = f.exponents()[0];
        const int m2 = f.exponents()[1];
        const std::int64_t a = static_cast<std::int64_t>(m1) * m2;
        if (a == 1) {
            push_line(lines, 1, 1, "1");
            push_line(lines, -1, 1, "-1");
            return finish(std::move(lines));
        }
        if (m1 == m2) {
            const std::int64_t m = m1;
            const std::int64_t kk = m * m + m - 2;
            const std::uint64_t disc =
                static_cast<std::uint64_t>(kk * kk + 4 * m * m * m);
            const double root = std::sqrt(static_cast<double>(disc));
            push_line(lines, (kk + root) / 2, 1, surd_string(kk, 1, disc, 2));
            push_line(lines, 0, static_cast<std::size_t>(2 * m - 2), "0");
            push_line(lines, -1, static_cast<std::size_t>(m * m - 2), "-1");
            push_line(lines, (kk - root) / 2, 1, surd_string(kk, -1, disc, 2));
            push_line(lines, -static_cast<double>(m), 1, std::to_string(-m));
            return finish(std::move(lines));
        }
        if (m1 == 1 || m2 == 1) {
            // The cubic has -1 as an exact root; peel it off and merge.
            IntPoly quad = poly_divide_exact(two_prime_cubic(m1, m2), IntPoly{1, 1});
            const double b = quad[1].convert_to<double>();
            const double c = quad[0].convert_to<double>();
            const double root = std::sqrt(b * b - 4 * c);
            push_line(lines, (-b + root) / 2, 1, "");
            push_line(lines, 0, static_cast<std::size_t>(m1 + m2 - 2), "0");
            push_line(lines, -1, static_cast<std::size_t>(a - 1), "-1");
            push_line(lines, (-b - root) / 2, 1, "");
            return finish(std::move(lines));
        }
        std::vector<double> roots = cubic_real_roots(two_prime_cubic(m1, m2));
        if (roots.size() != 3)
            throw std::runtime_error("two-prime cubic did not yield three real roots");
        push_line(lines, roots[2], 1, "");
        push_line(lines, 0, static_cast<std::size_t>(m1 + m2 - 2), "0");
        push_line(lines, -1, static_cast<std::size_t>(a - 2), "-1");
        push_line(lines, roots[1], 1, "");
        push_line(lines, roots[0], 1, "");
        return finish(std::move(lines));
    }

    if (!f.squarefree()) return std::nullopt;

    if (k == 3) {
        const double r2 = std::sqrt(2.0), r5 = std::sqrt(5.0);
        push_line(lines, 1 + r2, 1, surd_string(1, 1, 2, 1));
        push_line(lines, (-1 + r5) / 2, 2, surd_string(-1, 1, 5, 2));
        push_line(lines, 1 - r2, 1, surd_string(1, -1, 2, 1));
        push_line(lines, (-1 - r5) / 2, 2, surd_string(-1, -1, 5, 2));
        return finish(std::move(lines));
    }
    if (k == 4) {
        const double r21 = std::sqrt(21.0), r5 = std::sqrt(5.0);
        push_line(lines, (5 + r21) / 2, 1, surd_string(5, 1, 21, 2));
        push_line(lines, 1, 5, "1");
        push_line(lines, (5 - r21) / 2, 1, surd_string(5, -1, 21, 2));
        push_line(lines, (-3 + r5) / 2, 3, surd_string(-3, 1, 5, 2));
        push_line(lines, -1, 1, "-1");
        push_line(lines, (-3 - r5) / 2, 3, surd_string(-3, -1, 5, 2));
        return finish(std::move(lines));
    }
    return std::nullopt;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].multiplicity != b.entries[i].multiplicity) return false;
        if (std::abs(a.entries[i].value - b.entries[i].value) > tol) return false;
    }
    return true;
}

void adopt_symbols(Spectrum& a, const Spectrum& b, double tol) {
    if (!spectra_match(a, b, tol)) return;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        a.entries[i].symbol = b.entries[i].symbol;
}

} // namespace eigraph
