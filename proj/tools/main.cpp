#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "eigraph/report.hpp"
#include "eigraph/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;

eigraph::BigInt parse_n(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("n must be a positive integer, got '" + text + "'");
    return eigraph::BigInt(text);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like 4..10000");
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    if (lo.empty() || hi.empty() ||
        lo.find_first_not_of("0123456789") != std::string::npos ||
        hi.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("range must look like 4..10000");
    std::pair<std::uint64_t, std::uint64_t> r{std::stoull(lo), std::stoull(hi)};
    if (r.first > r.second)
        throw std::invalid_argument("range bounds are out of order");
    return r;
}

struct CommonFlags {
    double tol = 1e-9;
    std::size_t max_vertices = 0; // 0 = command default
    bool force_exact = false;
    bool force_numeric = false;
    std::string format = "table";
};

void add_common(CLI::App* cmd, CommonFlags& flags,
                const std::vector<std::string>& formats) {
    cmd->add_option("--tol", flags.tol, "eigenvalue clustering tolerance (absolute)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-vertices", flags.max_vertices, "vertex cap");
    auto* exact = cmd->add_flag("--exact", flags.force_exact,
                                "require the exact char poly (error above cap)");
    cmd->add_flag("--numeric", flags.force_numeric,
                  "numeric spectrum only, skip the exact char poly")
        ->excludes(exact);
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember(formats));
}

eigraph::AnalyzeOptions to_options(const CommonFlags& flags,
                                   std::size_t default_cap) {
    eigraph::AnalyzeOptions opts;
    opts.cluster_tol = flags.tol;
    opts.max_vertices = flags.max_vertices ? flags.max_vertices : default_cap;
    if (flags.force_exact) opts.mode = eigraph::AnalyzeOptions::Mode::exact;
    if (flags.force_numeric) opts.mode = eigraph::AnalyzeOptions::Mode::numeric;
    return opts;
}

int run_analyze(const std::string& n_text, const CommonFlags& flags) {
    const eigraph::BigInt n = parse_n(n_text);
    const eigraph::AnalysisReport r = eigraph::analyze(n, to_options(flags, 4096));
    if (flags.format == "json")
        std::cout << eigraph::report_json(r).dump(2) << "\n";
    else if (flags.format == "csv")
        std::cout << eigraph::csv_header() << "\n"
                  << eigraph::report_csv_row(r) << "\n";
    else
        std::cout << eigraph::report_table(r);
    return r.all_pass ? exit_ok : exit_verification_failed;
}

int run_verify(const std::string& range_text, const std::string& family_text,
               const std::string& k_text, const std::string& check_text,
               unsigned workers, const CommonFlags& flags) {
    eigraph::VerifyOptions opts;
    opts.checks = eigraph::parse_check_set(check_text);
    opts.cluster_tol = flags.tol;
    if (flags.max_vertices) opts.max_vertices = flags.max_vertices;
    opts.workers = workers;

    eigraph::VerifySummary summary;
    if (!range_text.empty() && !family_text.empty())
        throw std::invalid_argument("give a range or --family, not both");
    if (!range_text.empty()) {
        auto [lo, hi] = parse_range(range_text);
        std::cout << "verify range " << lo << ".." << hi
                  << " checks=" << check_text << "\n";
        summary = eigraph::verify_range(lo, hi, opts);
    } else if (!family_text.empty()) {
        auto [k_lo, k_hi] = parse_range(k_text);
        std::cout << "verify family " << family_text << " k=" << k_text
                  << " checks=" << check_text << "\n";
        summary = eigraph::verify_family(eigraph::parse_family(family_text),
                                         static_cast<int>(k_lo),
                                         static_cast<int>(k_hi), opts);
    } else {
        throw std::invalid_argument("verify needs a range (e.g. 4..10000) or --family");
    }
    std::cout << eigraph::summary_text(summary);
    return summary.failed == 0 ? exit_ok : exit_verification_failed;
}

int run_export(const std::string& n_text, const std::string& kind,
               const std::string& path, const CommonFlags& flags) {
    const eigraph::BigInt n = parse_n(n_text);
    eigraph::AnalyzeOptions opts = to_options(flags, 4096);
    const eigraph::IdealGraph g = eigraph::IdealGraph::build(n, opts.max_vertices);

    std::string format = flags.format;
    if (format == "table") { // infer from the file extension
        if (path.size() > 5 && path.rfind(".json") == path.size() - 5)
            format = "json";
        else if (path.size() > 4 && path.rfind(".csv") == path.size() - 4)
            format = "csv";
        else if (kind == "graph")
            format = "dimacs";
        else
            format = "json";
    }

    std::string payload;
    if (kind == "graph") {
        if (format == "json")
            payload = eigraph::graph_json(g).dump(2) + "\n";
        else if (format == "dimacs")
            payload = eigraph::graph_dimacs(g);
        else
            throw std::invalid_argument("graph export supports json or dimacs");
    } else if (kind == "spectrum") {
        if (format != "json")
            throw std::invalid_argument("spectrum export supports json");
        payload = eigraph::spectrum_json(eigraph::analyze(g, opts)).dump(2) + "\n";
    } else if (kind == "indices") {
        const eigraph::AnalysisReport r = eigraph::analyze(g, opts);
        if (format == "json")
            payload = eigraph::indices_json(r).dump(2) + "\n";
        else if (format == "csv")
            payload = eigraph::csv_header() + "\n" + eigraph::report_csv_row(r) + "\n";
        else
            throw std::invalid_argument("indices export supports json or csv");
    } else {
        throw std::invalid_argument("kind must be graph, spectrum, or indices");
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << payload;
    if (!out.good()) throw std::invalid_argument("write to '" + path + "' failed");
    std::cout << "wrote " << path << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"essential ideal graph of Z_n: spectra, energy, distance indices"};
    app.require_subcommand(1);

    std::string n_text, range_text, family_text, check_text = "all";
    std::string k_text = "2..6", kind, path;
    unsigned workers = 1;
    CommonFlags analyze_flags, verify_flags, export_flags;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one n");
    analyze_cmd->add_option("n", n_text, "composite modulus")->required();
    add_common(analyze_cmd, analyze_flags, {"table", "json", "csv"});

    auto* verify_cmd =
        app.add_subcommand("verify", "run the invariant suite over many n");
    verify_cmd->add_option("range", range_text, "inclusive range, e.g. 4..10000");
    verify_cmd->add_option("--family", family_text,
                           "p^m, two-prime, squarefree, or all");
    verify_cmd->add_option("--k", k_text, "prime-count range for squarefree sweeps");
    verify_cmd->add_option("--check", check_text,
                           "all, structure, nullity, spectrum, wiener, charpoly");
    verify_cmd->add_option("--parallel", workers, "worker thread count")
        ->check(CLI::PositiveNumber);
    add_common(verify_cmd, verify_flags, {"table"});

    auto* export_cmd = app.add_subcommand("export", "write machine-readable files");
    export_cmd->add_option("n", n_text, "composite modulus")->required();
    export_cmd->add_option("kind", kind, "graph, spectrum, or indices")->required();
    export_cmd->add_option("path", path, "output file")->required();
    add_common(export_cmd, export_flags, {"table", "json", "csv", "dimacs"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return exit_usage;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(n_text, analyze_flags);
        if (verify_cmd->parsed())
            return run_verify(range_text, family_text, k_text, check_text,
                              workers, verify_flags);
        return run_export(n_text, kind, path, export_flags);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification_failed;
    }
}
