#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigraph/graph.hpp"
#include "eigraph/indices.hpp"
#include "eigraph/poly.hpp"
#include "eigraph/spectrum.hpp"

#include "json.hpp"

namespace eigraph {

// Which families of cross-checks analyze() runs and reports.
enum CheckSet : unsigned {
    check_structure = 1u << 0,
    check_nullity = 1u << 1,
    check_spectrum = 1u << 2,
    check_wiener = 1u << 3,
    check_charpoly = 1u << 4,
    check_all = (1u << 5) - 1,
};

unsigned parse_check_set(const std::string& name); // throws on unknown name

struct AnalyzeOptions {
    double cluster_tol = 1e-9;
    double zero_tol = 1e-7;
    std::size_t max_vertices = 4096;
    std::size_t exact_cap = 64;
    enum class Mode { automatic, exact, numeric } mode = Mode::automatic;
    unsigned checks = check_all;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AnalysisReport {
    BigInt n;
    std::string factorization;
    int prime_count = 0;
    bool squarefree = false;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<BigInt> universal; // generators, canonical vertex order
    std::size_t clique_size = 0;

    bool has_spectrum = false;
    Spectrum spectrum;
    double energy = 0;
    bool hyperenergetic = false;
    std::size_t numeric_zero = 0;
    bool closed_covered = false;

    bool has_nullity = false;
    std::size_t nullity = 0;
    bool zero_predicted = false;

    std::optional<IntPoly> charpoly; // det(A - lambda I), within cap only

    bool has_indices = false;
    std::int64_t wiener_index = 0;
    Rational hyper_wiener_index;
    std::optional<std::int64_t> closed_w;
    std::optional<Rational> closed_ww;
    int diameter = 0;

    std::vector<CheckResult> checks;
    bool all_pass = true;
    double elapsed_seconds = 0;
};

AnalysisReport analyze(const BigInt& n, const AnalyzeOptions& opts = {});
AnalysisReport analyze(const IdealGraph& g, const AnalyzeOptions& opts = {});

std::string report_table(const AnalysisReport& r);
nlohmann::ordered_json report_json(const AnalysisReport& r);
std::string csv_header();
std::string report_csv_row(const AnalysisReport& r);

// Export payloads (schemas documented in the README).
nlohmann::ordered_json graph_json(const IdealGraph& g);
std::string graph_dimacs(const IdealGraph& g);
nlohmann::ordered_json spectrum_json(const AnalysisReport& r);
nlohmann::ordered_json indices_json(const AnalysisReport& r);

} // namespace eigraph
