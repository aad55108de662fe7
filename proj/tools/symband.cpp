// symband: solve, reduce, benchmark and report on band systems.
//
// Exit codes: 0 success, 1 usage or input error, 2 singular matrix,
// 3 not enough data for the requested report.

#include <atomic>
#include <charconv>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symband/bench.hpp"
#include "symband/io.hpp"
#include "symband/reduce.hpp"
#include "symband/report.hpp"
#include "symband/solver.hpp"

using namespace symband;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kUsage = 1, kSingular = 2, kInsufficient = 3 };

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted = true; }

int fail(int code, const std::string& msg) {
    std::cerr << "symband: " << msg << '\n';
    return code;
}

// ------------------------------------------------------------------ solve

struct SolveArgs {
    std::string input, output, storage = "fixed", backend = "exact";
};

int cmd_solve(const SolveArgs& a) {
    const AnySystem sys = read_system_file(a.input, parse_backend(a.backend), parse_storage(a.storage));
    const nlohmann::json out = std::visit([](const auto& s) { return solution_to_json(solve(s)); }, sys);
    write_json_file(a.output, out);
    return kOk;
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
    std::string input, output, to = "td", report;
};

int cmd_reduce(const ReduceArgs& a) {
    const int target = a.to == "td" ? 1 : a.to == "pd" ? 2 : 0;
    if (target == 0) return fail(kUsage, "--to must be pd or td");
    const AnySystem any = read_system_file(a.input, Backend::Exact, StorageKind::Fixed);
    const auto& sys = std::get<ExactSystem>(any);
    const ReductionReport r = reduce_chain(sys, target);
    write_json_file(a.output, system_to_json(r.reduced));
    const std::string report_path = a.report.empty() ? a.output + ".report.json" : a.report;
    write_json_file(report_path, report_to_json(r));
    std::cout << "reduced w=" << r.w_from << " to w=" << r.w_to << " at n=" << r.n << ": " << r.ops_counted
              << " rational operations (reference " << r.reference_ops << ")\n";
    return kOk;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
    std::vector<std::string> sizes, algorithms{"td"}, storage{"fixed"};
    std::string backend = "exact", csv;
    int reps = 3;
    std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& a) {
    if (a.reps < 1) return fail(kUsage, "--reps must be at least 1");
    std::vector<std::size_t> sizes;
    for (const auto& s : a.sizes) {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) return fail(kUsage, "bad size '" + s + "'");
        sizes.push_back(v);
    }
    std::vector<Algorithm> algorithms;
    for (const auto& s : a.algorithms) algorithms.push_back(parse_algorithm(s));
    std::vector<StorageKind> storages;
    for (const auto& s : a.storage) storages.push_back(parse_storage(s));
    const Backend backend = parse_backend(a.backend);
    for (Algorithm alg : algorithms)
        for (std::size_t n : sizes) check_size(static_cast<long long>(n), half_bandwidth(alg));

    const bool fresh = !fs::exists(a.csv) || fs::file_size(a.csv) == 0;
    std::ofstream out(a.csv, std::ios::app);
    if (!out) return fail(kUsage, "cannot open '" + a.csv + "' for appending");
    if (fresh) write_csv_header(out);
    out.flush();

    std::signal(SIGINT, on_sigint);
    std::size_t written = 0;
    for (StorageKind storage : storages)
        for (Algorithm alg : algorithms)
            for (std::size_t n : sizes) {
                GenSpec spec;
                spec.n = n;
                spec.w = half_bandwidth(alg);
                spec.seed = a.seed;
                spec.backend = backend;
                spec.storage = storage;
                const Generated g = generate_system(spec);
                for (int rep = 0; rep < a.reps; ++rep) {
                    if (g_interrupted) {
                        std::cerr << "symband: interrupted after " << written << " records\n";
                        return kUsage;
                    }
                    BenchRecord r = time_run(alg, g.system, g.planted, 1).front();
                    r.rep = rep;
                    write_csv_record(out, r);
                    out.flush();
                    ++written;
                    std::cout << to_string(alg) << ' ' << to_string(storage) << ' ' << to_string(backend) << " n=" << n
                              << " rep=" << rep << ' ' << r.seconds << " s\n";
                }
            }
    return kOk;
}

// ------------------------------------------------------------------ report

struct ReportArgs {
    std::string csv, svg;
    bool alpha = false, ratios = false;
};

int cmd_report(const ReportArgs& a) {
    std::ifstream in(a.csv);
    if (!in) return fail(kUsage, "cannot open '" + a.csv + "'");
    const std::vector<BenchRecord> records = read_csv(in);
    if (records.empty()) return fail(kInsufficient, "no benchmark records in '" + a.csv + "'");
    ReportBundle bundle;
    bundle.means = mean_table(records);
    std::cout << format_mean_table(bundle.means);
    if (a.alpha) {
        bundle.alphas = alpha_table(records);
        std::cout << '\n' << format_alpha_table(bundle.alphas);
    }
    if (a.ratios) {
        bundle.ratios = ratio_table(records);
        std::cout << '\n' << format_ratio_table(bundle.ratios);
    }
    if (!a.svg.empty()) {
        std::ofstream svg(a.svg);
        if (!svg) return fail(kUsage, "cannot write '" + a.svg + "'");
        svg << render_svg(bundle.means);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic solvers for tri-, penta- and heptadiagonal systems"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a band system from a JSON file");
    solve_cmd->add_option("--input", sa.input, "System JSON")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--output", sa.output, "Solution JSON")->required();
    solve_cmd->add_option("--storage", sa.storage, "fixed or list")->check(CLI::IsMember({"fixed", "list"}));
    solve_cmd->add_option("--backend", sa.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));

    ReduceArgs ra;
    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a penta- or heptadiagonal system to a narrower band");
    reduce_cmd->add_option("--input", ra.input, "System JSON")->required()->check(CLI::ExistingFile);
    reduce_cmd->add_option("--output", ra.output, "Reduced system JSON")->required();
    reduce_cmd->add_option("--to", ra.to, "pd or td")->check(CLI::IsMember({"pd", "td"}));
    reduce_cmd->add_option("--report", ra.report, "Report JSON (default: <output>.report.json)");

    BenchArgs ba;
    auto* bench_cmd = app.add_subcommand("bench", "Time solves on generated systems and append CSV records");
    bench_cmd->add_option("--sizes", ba.sizes, "Comma-separated n values")->required()->delimiter(',');
    bench_cmd->add_option("--algorithms", ba.algorithms, "td, pd, hd (or STDM, SPDM, SHDM)")->delimiter(',');
    bench_cmd->add_option("--storage", ba.storage, "fixed, list")->delimiter(',');
    bench_cmd->add_option("--backend", ba.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    bench_cmd->add_option("--reps", ba.reps, "Repetitions per configuration");
    bench_cmd->add_option("--seed", ba.seed, "Generator seed");
    bench_cmd->add_option("--csv", ba.csv, "CSV file to append to")->required();

    ReportArgs pa;
    auto* report_cmd = app.add_subcommand("report", "Summarize benchmark CSV records");
    report_cmd->add_option("--csv", pa.csv, "Benchmark CSV")->required();
    report_cmd->add_flag("--alpha", pa.alpha, "Print order-of-growth estimates");
    report_cmd->add_flag("--ratios", pa.ratios, "Print time ratios relative to STDM");
    report_cmd->add_option("--svg", pa.svg, "Write a bar chart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(sa);
        if (*reduce_cmd) return cmd_reduce(ra);
        if (*bench_cmd) return cmd_bench(ba);
        if (*report_cmd) return cmd_report(pa);
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::SingularMatrix: return fail(kSingular, e.what());
            case ErrorKind::FloatZeroPivot:
                return fail(kUsage, std::string(e.what()) + "; rerun with --backend exact");
            case ErrorKind::InsufficientData:
            case ErrorKind::MissingSeries: return fail(kInsufficient, e.what());
            default: return fail(kUsage, e.what());
        }
    } catch (const std::exception& e) {
        return fail(kUsage, e.what());
    }
    return kUsage;
}
