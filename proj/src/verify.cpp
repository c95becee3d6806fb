#include "eigraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace eigraph {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct SweepState {
    VerifySummary summary;
    std::mutex lock;
};

void run_one(const BigInt& n, const VerifyOptions& opts, SweepState& state) {
    AnalyzeOptions aopts;
    aopts.cluster_tol = opts.cluster_tol;
    aopts.zero_tol = opts.zero_tol;
    aopts.max_vertices = opts.max_vertices;
    aopts.exact_cap = opts.exact_cap;
    aopts.checks = opts.checks;

    bool ok = false;
    std::vector<VerifyIssue> issues;
    FactoredInteger f = factorize(n);
    std::size_t vertex_count = 1;
    for (int m : f.exponents()) vertex_count *= static_cast<std::size_t>(m) + 1;
    vertex_count -= 2;
    if (vertex_count > opts.max_vertices) {
        std::lock_guard<std::mutex> guard(state.lock);
        ++state.summary.skipped;
        return;
    }
    try {
        AnalysisReport r = analyze(IdealGraph::build(f, opts.max_vertices), aopts);
        ok = r.all_pass;
        for (const auto& c : r.checks)
            if (!c.pass) issues.push_back({n, c.name, c.detail});
    } catch (const std::exception& e) {
        issues.push_back({n, "exception", e.what()});
    }

    std::lock_guard<std::mutex> guard(state.lock);
    ++state.summary.tested;
    if (ok) ++state.summary.passed;
    else ++state.summary.failed;
    for (auto& issue : issues)
        state.summary.issues.push_back(std::move(issue));
}

VerifySummary sweep(const std::vector<BigInt>& values, const VerifyOptions& opts) {
    SweepState state;
    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1 || values.size() < 2) {
        for (const BigInt& n : values) run_one(n, opts, state);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < values.size();
                     i = next.fetch_add(1))
                    run_one(values[i], opts, state);
            });
        }
        for (auto& t : pool) t.join();
    }
    std::sort(state.summary.issues.begin(), state.summary.issues.end(),
              [](const VerifyIssue& a, const VerifyIssue& b) {
                  if (a.n != b.n) return a.n < b.n;
                  return a.check < b.check;
              });
    return state.summary;
}

} // namespace

Family parse_family(const std::string& name) {
    if (name == "p^m") return Family::p_power;
    if (name == "two-prime") return Family::two_prime;
    if (name == "squarefree") return Family::squarefree;
    if (name == "all") return Family::all;
    throw std::invalid_argument(
        "unknown family '" + name +
        "' (expected p^m, two-prime, squarefree, all)");
}

VerifySummary verify_range(std::uint64_t lo, std::uint64_t hi,
                           const VerifyOptions& opts) {
    if (lo > hi) throw std::invalid_argument("empty range");
    std::vector<BigInt> values;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 4); n <= hi; ++n)
        if (!is_prime_u64(n)) values.emplace_back(n);
    return sweep(values, opts);
}

std::vector<BigInt> family_members(Family family, int k_min, int k_max) {
    std::vector<BigInt> values;
    if (family == Family::p_power || family == Family::all) {
        for (std::uint64_t p : {2, 3, 5})
            for (int m = 2; m <= 10; ++m) {
                BigInt n = 1;
                for (int e = 0; e < m; ++e) n *= p;
                values.push_back(n);
            }
    }
    if (family == Family::two_prime || family == Family::all) {
        const std::uint64_t ps[] = {2, 3, 5};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                for (int m1 = 1; m1 <= 5; ++m1)
                    for (int m2 = 1; m2 <= 5; ++m2) {
                        BigInt n = 1;
                        for (int e = 0; e < m1; ++e) n *= ps[i];
                        for (int e = 0; e < m2; ++e) n *= ps[j];
                        values.push_back(n);
                    }
    }
    if (family == Family::squarefree || family == Family::all) {
        const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
        for (int k = std::max(2, k_min); k <= std::min(6, k_max); ++k) {
            BigInt n = 1;
            for (int i = 0; i < k; ++i) n *= primes[i];
            values.push_back(n);
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

VerifySummary verify_family(Family family, int k_min, int k_max,
                            const VerifyOptions& opts) {
    return sweep(family_members(family, k_min, k_max), opts);
}

std::string summary_text(const VerifySummary& s) {
    std::ostringstream out;
    out << "tested " << s.tested << "  passed " << s.passed << "  failed "
        << s.failed << "  skipped " << s.skipped << "\n";
    for (const auto& issue : s.issues) {
        out << "  FAIL n=" << issue.n.str() << " " << issue.check;
        if (!issue.detail.empty()) out << ": " << issue.detail;
        out << "\n";
    }
    out << (s.failed == 0 ? "result: PASS" : "result: FAIL") << "\n";
    return out.str();
}

} // namespace eigraph
