#include "eigraph/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace eigraph {

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string fixed9(double x) {
    if (std::abs(x) < 0.5e-9) x = 0.0; // avoid a cosmetic -0.000000000
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    return buf;
}

// Exact integers emit as JSON numbers while they fit a double exactly,
// decimal strings beyond that.
nlohmann::ordered_json exact_int(const BigInt& v) {
    static const BigInt lim = BigInt(1) << 53;
    if (v > -lim && v < lim) return v.convert_to<std::int64_t>();
    return v.str();
}

bool coprime(const IdealId& a, const IdealId& b) {
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] >= 1 && b.exponents[i] >= 1) return false;
    return true;
}

void add_check(AnalysisReport& r, const std::string& name, bool pass,
               std::string detail = "") {
    r.checks.push_back({name, pass, std::move(detail)});
    if (!pass) r.all_pass = false;
}

void structure_checks(AnalysisReport& r, const IdealGraph& g) {
    const std::size_t n = g.vertex_count();
    const FactoredInteger& f = g.ring();

    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < n; ++i) degree_sum += g.degree(i);
    add_check(r, "degree-sum", degree_sum == 2 * g.edge_count());

    bool oracle_ok = true;
    for (std::size_t i = 0; i < n && oracle_ok; ++i)
        oracle_ok = is_essential(g.vertices()[i], f) ==
                    is_essential_oracle(g.vertices()[i], f);
    add_check(r, "essential-oracle", oracle_ok);

    std::vector<std::size_t> universal = universal_vertices(g);
    bool essential_universal = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_essential(g.vertices()[i], f) &&
            std::find(universal.begin(), universal.end(), i) == universal.end())
            essential_universal = false;
    }
    if (!f.squarefree() && universal.empty()) essential_universal = false;
    add_check(r, "universal-essential", essential_universal);

    if (f.squarefree() && n >= 2) {
        bool gcd_ok = true;
        for (std::size_t i = 0; i < n && gcd_ok; ++i)
            for (std::size_t j = i + 1; j < n && gcd_ok; ++j)
                gcd_ok = g.edge(i, j) ==
                         coprime(g.vertices()[i], g.vertices()[j]);
        add_check(r, "gcd-rule", gcd_ok);
    }

    try {
        JoinDecomposition d = join_decomposition(g);
        add_check(r, "join-structure", true);
        r.clique_size = d.clique_size;
    } catch (const structure_error& e) {
        add_check(r, "join-structure", false, e.what());
    }

    if (f.squarefree() && f.prime_count() >= 2) {
        try {
            VertexPartition p = equitable_partition(g);
            const int k = f.prime_count();
            bool counts_ok = true;
            for (int t = 1; t <= k - 1; ++t) {
                if (p.classes[t - 1].size() !=
                    static_cast<std::size_t>(binomial(k, t)))
                    counts_ok = false;
                for (int s = 1; s <= k - 1; ++s)
                    if (p.neighbor_counts[t - 1][s - 1] !=
                        static_cast<std::size_t>(binomial(k - t, s)))
                        counts_ok = false;
            }
            add_check(r, "equitable-partition", counts_ok);
        } catch (const structure_error& e) {
            add_check(r, "equitable-partition", false, e.what());
        }
    }
}

} // namespace

unsigned parse_check_set(const std::string& name) {
    if (name == "all") return check_all;
    if (name == "structure") return check_structure;
    if (name == "nullity") return check_nullity;
    if (name == "spectrum") return check_spectrum;
    if (name == "wiener") return check_wiener;
    if (name == "charpoly") return check_charpoly;
    throw std::invalid_argument(
        "unknown check '" + name +
        "' (expected all, structure, nullity, spectrum, wiener, charpoly)");
}

AnalysisReport analyze(const BigInt& n, const AnalyzeOptions& opts) {
    return analyze(IdealGraph::build(n, opts.max_vertices), opts);
}

AnalysisReport analyze(const IdealGraph& g, const AnalyzeOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    AnalysisReport r;
    const FactoredInteger& f = g.ring();
    r.n = f.value();
    r.factorization = f.display();
    r.prime_count = f.prime_count();
    r.squarefree = f.squarefree();
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    for (std::size_t i : universal_vertices(g))
        r.universal.push_back(generator(g.vertices()[i], f));
    r.clique_size = 1;
    for (int m : f.exponents()) r.clique_size *= static_cast<std::size_t>(m);
    r.clique_size -= 1;

    const std::size_t n = g.vertex_count();

    if (opts.checks & check_structure) structure_checks(r, g);

    const bool want_spectrum =
        opts.checks & (check_spectrum | check_nullity);
    if (want_spectrum) {
        r.spectrum = eigenvalues_numeric(g, opts.cluster_tol);
        r.has_spectrum = true;
        r.energy = spectrum_energy(r.spectrum);
        r.hyperenergetic = is_hyperenergetic(r.spectrum);
        r.numeric_zero = numeric_zero_multiplicity(r.spectrum, opts.zero_tol);

        if (opts.checks & check_spectrum) {
            double trace = 0, moment = 0;
            for (const auto& line : r.spectrum.entries) {
                trace += line.multiplicity * line.value;
                moment += line.multiplicity * line.value * line.value;
            }
            add_check(r, "trace", std::abs(trace) <= 1e-8 * n,
                      "sum " + fixed9(trace));
            add_check(r, "moment",
                      std::abs(moment - 2.0 * g.edge_count()) <= 1e-6,
                      "sum of squares " + fixed9(moment));

            if (auto closed = closed_form_spectrum(f)) {
                r.closed_covered = true;
                const bool match = spectra_match(r.spectrum, *closed, 1e-8);
                add_check(r, "closed-spectrum", match);
                adopt_symbols(r.spectrum, *closed, 1e-8);
            }
        }
    }

    if (opts.checks & check_nullity) {
        r.nullity = nullity_exact(g);
        r.has_nullity = true;
        r.zero_predicted = zero_eigenvalue_predicted(f);
        add_check(r, "nullity-numeric", r.numeric_zero == r.nullity,
                  "numeric " + std::to_string(r.numeric_zero) + ", exact " +
                      std::to_string(r.nullity));
        add_check(r, "nullity-predicted",
                  (r.nullity > 0) == r.zero_predicted);
    }

    const bool exact_requested = opts.mode != AnalyzeOptions::Mode::numeric &&
                                 (opts.checks & check_charpoly);
    if (exact_requested) {
        if (n <= opts.exact_cap) {
            r.charpoly = char_poly_exact(g, opts.exact_cap);
        } else if (opts.mode == AnalyzeOptions::Mode::exact) {
            char_poly_exact(g, opts.exact_cap); // throws with guidance
        }
    }
    if (r.charpoly) {
        const IntPoly& p = *r.charpoly;
        if (n >= 2) {
            add_check(r, "charpoly-trace", p[n - 1] == 0);
            BigInt expected = -static_cast<std::int64_t>(g.edge_count());
            if (n % 2 == 1) expected = -expected;
            add_check(r, "charpoly-edges", p[n - 2] == expected);
        } else {
            add_check(r, "charpoly-trace", p[0] == 0);
        }
        if (f.prime_count() == 1) {
            IntPoly complete =
                poly_mul(IntPoly{1 - static_cast<std::int64_t>(n), 1},
                         poly_pow(IntPoly{1, 1}, static_cast<unsigned>(n - 1)));
            add_check(r, "charpoly-prime-power", poly_monic(p) == complete);
        }
        if (f.prime_count() == 2) {
            IntPoly expected =
                two_prime_charpoly(f.exponents()[0], f.exponents()[1]);
            add_check(r, "charpoly-two-prime", poly_monic(p) == expected);
        }
    }

    if (opts.checks & check_wiener) {
        r.wiener_index = wiener(g);
        r.hyper_wiener_index = hyper_wiener(g);
        r.diameter = diameter(g);
        r.has_indices = true;
        r.closed_w = closed_wiener(f);
        r.closed_ww = closed_hyper_wiener(f);
        if (r.closed_w)
            add_check(r, "wiener-closed", *r.closed_w == r.wiener_index,
                      "bfs " + std::to_string(r.wiener_index) + ", closed " +
                          std::to_string(*r.closed_w));
        if (r.closed_ww)
            add_check(r, "hyper-wiener-closed",
                      *r.closed_ww == r.hyper_wiener_index,
                      "bfs " + r.hyper_wiener_index.str() + ", closed " +
                          r.closed_ww->str());
        const bool ww_ge_w =
            r.hyper_wiener_index.num >= r.wiener_index * r.hyper_wiener_index.den;
        const bool equality =
            r.hyper_wiener_index == Rational{r.wiener_index, 1};
        add_check(r, "hyper-wiener-vs-wiener",
                  ww_ge_w && (equality == (r.diameter <= 1)));
        if (f.prime_count() == 2 && f.exponents()[0] == f.exponents()[1])
            add_check(r, "equal-exponent-wiener",
                      r.closed_w &&
                          *r.closed_w == equal_exponent_wiener(f.exponents()[0]));
        int bound = r.squarefree && f.prime_count() >= 2 ? 3 : 2;
        if (f.prime_count() == 1) bound = 1;
        add_check(r, "diameter-bound", r.diameter <= bound,
                  "diameter " + std::to_string(r.diameter));
    }

    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    return r;
}

std::string report_table(const AnalysisReport& r) {
    std::ostringstream out;
    out << "n = " << r.n.str() << " = " << r.factorization << "\n";
    out << "vertices " << r.vertex_count << ", edges " << r.edge_count
        << ", clique size " << r.clique_size << "\n";
    out << "universal vertices:";
    if (r.universal.empty()) out << " none";
    for (const BigInt& gen : r.universal) out << " <" << gen.str() << ">";
    out << "\n";
    if (r.has_spectrum) {
        out << "spectrum (value, multiplicity, symbol):\n";
        for (const auto& line : r.spectrum.entries) {
            out << "  " << fixed9(line.value) << "  x" << line.multiplicity;
            if (!line.symbol.empty()) out << "  " << line.symbol;
            out << "\n";
        }
        out << "energy " << fixed9(r.energy) << ", hyperenergetic "
            << (r.hyperenergetic ? "yes" : "no") << "\n";
    }
    if (r.has_nullity)
        out << "nullity " << r.nullity << " (zero eigenvalue predicted: "
            << (r.zero_predicted ? "yes" : "no") << ")\n";
    if (r.charpoly)
        out << "charpoly det(A - xI): " << poly_display(*r.charpoly) << "\n";
    if (r.has_indices) {
        out << "wiener " << r.wiener_index;
        if (r.closed_w) out << " (closed " << *r.closed_w << ")";
        out << ", hyper-wiener " << r.hyper_wiener_index.str();
        if (r.closed_ww) out << " (closed " << r.closed_ww->str() << ")";
        out << ", diameter " << r.diameter << "\n";
    }
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass;
    out << "checks " << passed << "/" << r.checks.size() << " pass";
    for (const auto& c : r.checks)
        if (!c.pass) {
            out << "\n  FAIL " << c.name;
            if (!c.detail.empty()) out << ": " << c.detail;
        }
    out << "\n";
    out << "elapsed " << fixed9(r.elapsed_seconds) << " s\n";
    out << (r.all_pass ? "result: PASS" : "result: FAIL") << "\n";
    return out.str();
}

nlohmann::ordered_json report_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["n"] = exact_int(r.n);
    j["factorization"] = r.factorization;
    j["vertices"] = r.vertex_count;
    j["edges"] = r.edge_count;
    nlohmann::ordered_json universal = nlohmann::ordered_json::array();
    for (const BigInt& gen : r.universal) universal.push_back(exact_int(gen));
    j["universal"] = universal;
    j["clique_size"] = r.clique_size;
    if (r.has_spectrum) {
        nlohmann::ordered_json eigs = nlohmann::ordered_json::array();
        for (const auto& line : r.spectrum.entries)
            eigs.push_back({{"value", line.value},
                            {"multiplicity", line.multiplicity},
                            {"symbol", line.symbol}});
        j["eigenvalues"] = eigs;
        j["energy"] = r.energy;
        j["hyperenergetic"] = r.hyperenergetic;
    }
    if (r.has_nullity) {
        j["nullity"] = r.nullity;
        j["zero_eigenvalue_predicted"] = r.zero_predicted;
    }
    if (r.charpoly)
        j["charpoly"] = poly_decimal_strings(*r.charpoly);
    if (r.has_indices) {
        j["wiener"] = r.wiener_index;
        j["hyper_wiener"] = {{"num", r.hyper_wiener_index.num},
                             {"den", r.hyper_wiener_index.den}};
        if (r.closed_w) {
            j["closed_wiener"] = *r.closed_w;
            j["closed_hyper_wiener"] = {{"num", r.closed_ww->num},
                                        {"den", r.closed_ww->den}};
            j["closed_form_match"] =
                *r.closed_w == r.wiener_index &&
                *r.closed_ww == r.hyper_wiener_index;
        } else {
            j["closed_form_match"] = "not covered";
        }
        j["diameter"] = r.diameter;
    }
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["all_checks_pass"] = r.all_pass;
    return j;
}

std::string csv_header() {
    return "n,N,edges,energy,nullity,wiener,hyper_wiener_num,hyper_wiener_den,"
           "all_checks_pass";
}

std::string report_csv_row(const AnalysisReport& r) {
    std::ostringstream out;
    out << r.n.str() << ',' << r.vertex_count << ',' << r.edge_count << ','
        << fixed9(r.energy) << ',' << r.nullity << ',' << r.wiener_index << ','
        << r.hyper_wiener_index.num << ',' << r.hyper_wiener_index.den << ','
        << (r.all_pass ? "true" : "false");
    return out.str();
}

nlohmann::ordered_json graph_json(const IdealGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = exact_int(g.ring().value());
    j["factorization"] = g.ring().display();
    nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
    for (const IdealId& v : g.vertices())
        vertices.push_back(exact_int(generator(v, g.ring())));
    j["vertices"] = vertices;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (g.edge(i, k)) edges.push_back({i, k});
    j["edges"] = edges;
    return j;
}

std::string graph_dimacs(const IdealGraph& g) {
    std::ostringstream out;
    out << "c essential ideal graph for n = " << g.ring().value().str() << "\n";
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        out << "c vertex " << i + 1 << " generator "
            << generator(g.vertices()[i], g.ring()).str() << "\n";
    out << "p edge " << n << " " << g.edge_count() << "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (g.edge(i, k)) out << "e " << i + 1 << " " << k + 1 << "\n";
    return out.str();
}

nlohmann::ordered_json spectrum_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["n"] = exact_int(r.n);
    nlohmann::ordered_json eigs = nlohmann::ordered_json::array();
    for (const auto& line : r.spectrum.entries)
        eigs.push_back({{"value", line.value},
                        {"multiplicity", line.multiplicity},
                        {"symbol", line.symbol}});
    j["eigenvalues"] = eigs;
    if (r.charpoly)
        j["charpoly"] = poly_decimal_strings(*r.charpoly);
    else
        j["charpoly"] = nullptr;
    return j;
}

nlohmann::ordered_json indices_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["n"] = exact_int(r.n);
    j["wiener"] = r.wiener_index;
    j["hyper_wiener"] = {{"num", r.hyper_wiener_index.num},
                         {"den", r.hyper_wiener_index.den}};
    if (r.closed_w)
        j["closed_form_match"] = *r.closed_w == r.wiener_index &&
                                 r.closed_ww &&
                                 *r.closed_ww == r.hyper_wiener_index;
    else
        j["closed_form_match"] = "not covered";
    return j;
}

} // namespace eigraph
