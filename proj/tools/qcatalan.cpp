// qcatalan: compute Catalan/PBW elements, run the identity-verification
// suites, or benchmark the shuffle kernel.
//
// Exit codes: 0 success; 1 verification failures; 2 bad arguments or
// selector; 3 word-length cap exceeded.

#include "qshuffle/pbw.hpp"
#include "qshuffle/pretty.hpp"
#include "qshuffle/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using namespace qshuffle;

struct RunConfig {
    std::string format;  // "json", "pretty" or "" (auto)
    std::string out_path;
    std::string braiding = "super";
    int max_degree = 12;
    bool parallel = false;
};

bool use_pretty(const RunConfig& cfg) {
    if (cfg.format == "pretty") return true;
    if (cfg.format == "json") return false;
    return isatty(fileno(stdout)) != 0;
}

/// Writes to --out when given, else stdout. Output is newline-terminated.
void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(cfg.out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

int cmd_compute(const RunConfig& cfg, const std::string& target, int n) {
    if (n < 0) {
        std::cerr << "error: index must be >= 0\n";
        return 2;
    }
    CatalanTable cat;
    Shuffler sh(BraidingKind::Super);
    FreeElement result;
    if (target == "catalan") result = cat.element(n);
    else if (target == "xcatalan") result = cat.flank(n, FlankMode::XLeft);
    else if (target == "catalany") result = cat.flank(n, FlankMode::YRight);
    else if (target == "xcatalany") result = cat.flank(n, FlankMode::Both);
    else if (target == "damiani0") result = damiani_generators(n, sh).real0[n];
    else if (target == "damiani1") result = damiani_generators(n, sh).real1[n];
    else if (target == "imag") {
        if (n < 1) {
            std::cerr << "error: imaginary generators start at index 1\n";
            return 2;
        }
        result = damiani_generators(n, sh).imag[n];
    } else if (target == "beck") {
        if (n < 1) {
            std::cerr << "error: Beck generators start at index 1\n";
            return 2;
        }
        result = beck_from_damiani(n, damiani_generators(n, sh).imag, sh);
    } else {
        std::cerr << "error: unknown target '" << target
                  << "' (expected catalan|xcatalan|catalany|xcatalany|damiani0|damiani1|imag|beck)\n";
        return 2;
    }
    emit(cfg, use_pretty(cfg) ? pretty_element(result) : result.to_json().dump());
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    std::vector<std::string> selectors;
    std::stringstream ss(suite);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) selectors.push_back(tok);
    }
    if (selectors.empty()) selectors.push_back("all");

    std::vector<VerifyReport> reports;
    try {
        reports = run_suite(selectors, cfg.max_degree, cfg.parallel);
    } catch (const BadSelectorError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }

    const bool pretty = use_pretty(cfg);
    std::string out;
    std::size_t n_passed = 0;
    double total = 0.0;
    for (const auto& rep : reports) {
        if (rep.passed) ++n_passed;
        total += rep.elapsed_seconds;
        if (pretty) {
            std::string params;
            for (std::size_t i = 0; i < rep.kase.params.size(); ++i)
                params += (i ? "," : "") + std::to_string(rep.kase.params[i]);
            out += std::string(rep.passed ? "pass " : "FAIL ") + rep.kase.id + "(" + params + ")";
            if (rep.variants) out += " [" + rep.variants->passing() + "]";
            if (rep.error) out += " error: " + *rep.error;
            if (!rep.passed && !rep.residual.is_zero())
                out += " residual: " + rep.residual.str();
            out += "\n";
        } else {
            out += rep.to_json().dump() + "\n";
        }
    }
    nlohmann::json summary{{"cases", reports.size()},
                           {"passed", n_passed},
                           {"failed", reports.size() - n_passed},
                           {"total_seconds", total}};
    out += pretty ? (std::to_string(n_passed) + "/" + std::to_string(reports.size()) +
                     " passed in " + std::to_string(total) + "s\n")
                  : ("{\"summary\":" + summary.dump() + "}\n");
    emit(cfg, out);
    return n_passed == reports.size() ? 0 : 1;
}

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_bench(const RunConfig& cfg, int max_n) {
    std::ostringstream csv;
    csv << "task,n,terms,millis,cache\n";
    char buf[64];
    auto row = [&](const char* task, int n, std::size_t terms, double ms, const char* cache) {
        std::snprintf(buf, sizeof buf, "%.3f", ms);
        csv << task << ',' << n << ',' << terms << ',' << buf << ',' << cache << '\n';
    };

    for (int n = 0; n <= max_n; ++n) {
        // catalan element: fresh table vs. shared table, cold then warm
        std::size_t terms = 0;
        double ms = time_ms([&] {
            CatalanTable fresh;
            terms = fresh.element(n).term_count();
        });
        row("catalan", n, terms, ms, "off");
    }
    CatalanTable shared;
    for (int n = 0; n <= max_n; ++n) {
        std::size_t terms = 0;
        double cold = time_ms([&] { terms = shared.element(n).term_count(); });
        row("catalan", n, terms, cold, "cold");
        double warm = time_ms([&] { terms = shared.element(n).term_count(); });
        row("catalan", n, terms, warm, "warm");
    }

    // representative shuffle under the configured braiding:
    // C_ceil(n/2) * C_floor(n/2)
    const BraidingKind kind =
        cfg.braiding == "admissible" ? BraidingKind::Admissible : BraidingKind::Super;
    CatalanTable cat;
    for (int n = 0; n <= max_n; ++n) {
        const FreeElement& a = cat.element((n + 1) / 2);
        const FreeElement& b = cat.element(n / 2);
        std::size_t terms = 0;
        double ms = time_ms([&] {
            Shuffler off(kind, /*memo_cap=*/0);
            terms = off.shuffle_elems(a, b).term_count();
        });
        row("shuffle", n, terms, ms, "off");
        Shuffler on(kind);
        double cold = time_ms([&] { terms = on.shuffle_elems(a, b).term_count(); });
        row("shuffle", n, terms, cold, "cold");
        double warm = time_ms([&] { terms = on.shuffle_elems(a, b).term_count(); });
        row("shuffle", n, terms, warm, "warm");
    }
    emit(cfg, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in braided q-shuffle algebras on two letters"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string target;
    int degree = 0;
    auto* compute = app.add_subcommand("compute", "compute an element and print it");
    compute->add_option("target", target,
                        "one of: catalan xcatalan catalany xcatalany damiani0 damiani1 imag beck")
        ->required();
    compute->add_option("index", degree, "element index n");
    compute->add_option("-n,--degree", degree, "element index n (same as the positional)");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run identity suites, report JSON lines");
    verify->add_option("--suite", suite, "comma-separated family selectors, e.g. serre,CICJ or all");
    verify->add_option("--max-degree", cfg.max_degree, "residual-degree budget")
        ->default_val(12);
    verify->add_flag("--parallel", cfg.parallel, "evaluate cases across threads");

    int bench_max = 6;
    auto* bench = app.add_subcommand("bench", "benchmark the kernel, emit CSV");
    bench->add_option("--max", bench_max, "largest Catalan index to time")->default_val(6);

    for (auto* sub : {compute, verify, bench}) {
        sub->add_option("--format", cfg.format, "json or pretty (default: pretty on a terminal)")
            ->check(CLI::IsMember({"json", "pretty"}));
        sub->add_option("--braiding", cfg.braiding, "admissible or super")
            ->check(CLI::IsMember({"admissible", "super"}));
        sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(cfg, target, degree);
        if (verify->parsed()) return cmd_verify(cfg, suite);
        return cmd_bench(cfg, bench_max);
    } catch (const CapExceededError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
}
