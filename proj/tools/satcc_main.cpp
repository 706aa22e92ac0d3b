// satcc — equality-saturation optimizer for OpenACC C kernels.
//
//   satcc [opt] [flags] file...        optimized source to stdout / -o
//   satcc report [flags] file...       metrics JSON to stdout / --report-file
//   satcc verify [flags] file...       differential test report, exit 1 on mismatch
//   satcc [flags] -- cmd arg...        optimize source args, run cmd on the results

#include <sys/wait.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "satcc/diag.hpp"
#include "satcc/oracle.hpp"
#include "satcc/parser.hpp"
#include "satcc/pipeline.hpp"
#include "satcc/ssa.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace satcc;

namespace {

struct Options {
    std::string variant = "accsat";
    long long max_nodes = 10000;
    double sat_time = 10.0;
    int iters = 10;
    double extract_time = 30.0;
    std::string extract = "ilp";
    bool no_bulk = false;
    bool no_sat = false;
    bool keep = false;
    int jobs = 1;
    std::string output;
    std::string report_file;
    int trials = 100;
    double tol_rel = 1e-6;
    std::vector<std::string> files;
};

VariantConfig variant_of(const Options& o) {
    VariantConfig v = VariantConfig::from_name(o.variant);
    if (o.no_sat) v.sat = false;
    if (o.no_bulk) v.bulk = false;
    return v;
}

PipelineLimits limits_of(const Options& o) {
    PipelineLimits lim;
    lim.sat.max_nodes = static_cast<size_t>(o.max_nodes);
    lim.sat.max_time = o.sat_time;
    lim.sat.max_iters = o.iters;
    lim.extract.max_time = o.extract_time;
    lim.method = o.extract == "greedy" ? ExtractMethod::Greedy : ExtractMethod::Ilp;
    lim.jobs = o.jobs;
    return lim;
}

// Runs fn(0..n-1) on up to `jobs` threads; results land wherever fn writes.
void for_each_parallel(size_t n, int jobs, const std::function<void(size_t)>& fn) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (jobs == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

json metrics_json(const FileMetrics& fm) {
    json regions = json::array();
    for (const RegionMetrics& r : fm.regions) {
        regions.push_back({{"region", r.region_index},
                           {"function", r.function},
                           {"ssa_ms", r.ssa_ms},
                           {"sat_ms", r.sat_ms},
                           {"extract_ms", r.extract_ms},
                           {"nodes_final", r.nodes_final},
                           {"stop_reason", r.stop_reason},
                           {"objective_before", r.objective_before},
                           {"objective_after", r.objective_after},
                           {"static_loads_before", r.static_loads_before},
                           {"static_loads_after", r.static_loads_after},
                           {"static_stores", r.static_stores},
                           {"fma_count", r.fma_count},
                           {"method", r.method},
                           {"timed_out", r.timed_out},
                           {"error", r.error}});
    }
    return {{"file", fm.file}, {"variant", fm.variant}, {"regions", std::move(regions)}};
}

int write_report(const json& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    out << doc.dump(2) << "\n";
    if (!out) {
        std::cerr << "satcc: error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

struct FileRun {
    std::string text;
    FileMetrics metrics;
    std::string error;  // parse or I/O failure
};

std::vector<FileRun> run_files(const Options& o) {
    VariantConfig v = variant_of(o);
    PipelineLimits lim = limits_of(o);
    std::vector<FileRun> runs(o.files.size());
    for_each_parallel(o.files.size(), o.jobs, [&](size_t i) {
        try {
            auto [text, met] = optimize_file(o.files[i], v, lim);
            runs[i] = {std::move(text), std::move(met), ""};
        } catch (const std::exception& e) {
            runs[i].metrics.file = o.files[i];
            runs[i].error = e.what();
        }
    });
    return runs;
}

int cmd_opt(const Options& o) {
    if (o.files.empty()) {
        std::cerr << "satcc: error: no input files\n";
        return 2;
    }
    if (!o.output.empty() && o.files.size() > 1) {
        std::cerr << "satcc: error: -o accepts a single input file\n";
        return 2;
    }
    std::vector<FileRun> runs = run_files(o);
    int rc = 0;
    json files = json::array();
    for (const FileRun& r : runs) {
        if (!r.error.empty()) {
            std::cerr << "satcc: error: " << r.error << "\n";
            rc = 1;
            continue;
        }
        for (const RegionMetrics& m : r.metrics.regions)
            if (!m.error.empty())
                std::cerr << "satcc: warning: " << r.metrics.file << ": region " << m.region_index
                          << " left unchanged: " << m.error << "\n";
        files.push_back(metrics_json(r.metrics));
        if (o.output.empty()) {
            std::cout << r.text;
        } else {
            std::ofstream out(o.output, std::ios::binary);
            out << r.text;
            if (!out) {
                std::cerr << "satcc: error: cannot write " << o.output << "\n";
                rc = 1;
            }
        }
    }
    if (!o.report_file.empty()) {
        json doc = {{"schema", "satcc-metrics-v1"}, {"files", std::move(files)}};
        rc = std::max(rc, write_report(doc, o.report_file));
    }
    return rc;
}

int cmd_report(const Options& o) {
    if (o.files.empty()) {
        std::cerr << "satcc: error: no input files\n";
        return 2;
    }
    std::vector<FileRun> runs = run_files(o);
    int rc = 0;
    json files = json::array();
    for (const FileRun& r : runs) {
        if (!r.error.empty()) {
            std::cerr << "satcc: error: " << r.error << "\n";
            rc = 1;
            continue;
        }
        files.push_back(metrics_json(r.metrics));
    }
    json doc = {{"schema", "satcc-metrics-v1"}, {"files", std::move(files)}};
    return std::max(rc, write_report(doc, o.report_file));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_verify(const Options& o) {
    if (o.files.empty()) {
        std::cerr << "satcc: error: no input files\n";
        return 2;
    }
    std::vector<FileRun> runs = run_files(o);
    bool all_ok = true;
    int rc = 0;
    json files = json::array();
    for (size_t i = 0; i < runs.size(); ++i) {
        const FileRun& r = runs[i];
        if (!r.error.empty()) {
            std::cerr << "satcc: error: " << r.error << "\n";
            rc = 1;
            continue;
        }
        json regions = json::array();
        try {
            KernelModule orig = parse(read_file(o.files[i]), o.files[i]);
            KernelModule opt = parse(r.text, o.files[i] + " (optimized)");
            std::vector<Region> orig_regions = find_regions(orig);
            std::vector<Region> opt_regions = find_regions(opt);
            if (orig_regions.size() != opt_regions.size())
                throw InternalError("optimized output lost a region");
            for (size_t k = 0; k < orig_regions.size(); ++k) {
                SymbolTable syms =
                    build_ssa(orig_regions[k], module_symbols(orig, *orig_regions[k].fn)).symbols;
                DiffReport rep =
                    diff_test(orig_regions[k], opt_regions[k], o.trials, o.tol_rel, syms);
                json failures = json::array();
                for (size_t f = 0; f < rep.failures.size() && f < 10; ++f)
                    failures.push_back({{"seed", rep.failures[f].seed},
                                        {"location", rep.failures[f].location},
                                        {"got", rep.failures[f].got},
                                        {"want", rep.failures[f].want}});
                regions.push_back({{"region", static_cast<int>(k)},
                                   {"function", orig_regions[k].fn->name},
                                   {"n_trials", rep.n_trials},
                                   {"max_rel_err", rep.max_rel_err},
                                   {"max_abs_err", rep.max_abs_err},
                                   {"n_failures", rep.failures.size()},
                                   {"failures", std::move(failures)},
                                   {"ok", rep.ok()}});
                if (!rep.ok()) all_ok = false;
            }
        } catch (const std::exception& e) {
            std::cerr << "satcc: error: " << o.files[i] << ": " << e.what() << "\n";
            rc = 1;
            continue;
        }
        files.push_back({{"file", o.files[i]},
                         {"variant", r.metrics.variant},
                         {"regions", std::move(regions)}});
    }
    json doc = {{"schema", "satcc-verify-v1"},
                {"trials", o.trials},
                {"tol_rel", o.tol_rel},
                {"ok", all_ok},
                {"files", std::move(files)}};
    rc = std::max(rc, write_report(doc, o.report_file));
    if (!all_ok) rc = std::max(rc, 1);
    return rc;
}

bool is_source_arg(const std::string& arg) {
    return arg.size() > 2 && arg[0] != '-' && arg.substr(arg.size() - 2) == ".c";
}

int wrap_compiler(std::vector<std::string> cmd, const Options& o) {
    if (cmd.empty()) {
        std::cerr << "satcc: error: no command after --\n";
        return 2;
    }
    VariantConfig v = variant_of(o);
    PipelineLimits lim = limits_of(o);

    fs::path dir;
    bool have_dir = false;
    auto ensure_dir = [&]() -> fs::path& {
        if (!have_dir) {
            if (o.keep) {
                dir = "satcc-cache";
                fs::create_directories(dir);
            } else {
                std::string tmpl = (fs::temp_directory_path() / "satcc-XXXXXX").string();
                std::vector<char> buf(tmpl.begin(), tmpl.end());
                buf.push_back('\0');
                if (!mkdtemp(buf.data())) throw std::runtime_error("cannot create temp dir");
                dir = buf.data();
            }
            have_dir = true;
        }
        return dir;
    };

    for (size_t i = 1; i < cmd.size(); ++i) {
        if (!is_source_arg(cmd[i]) || !fs::exists(cmd[i])) continue;
        try {
            auto [text, met] = optimize_file(cmd[i], v, lim);
            for (const RegionMetrics& m : met.regions)
                if (!m.error.empty())
                    std::cerr << "satcc: warning: " << cmd[i] << ": region " << m.region_index
                              << " left unchanged: " << m.error << "\n";
            // Per-argument subdirectory keeps the original basename, so tools
            // deriving output names from it (cc -c) behave identically.
            fs::path sub = ensure_dir() / std::to_string(i);
            fs::create_directories(sub);
            fs::path repl = sub / fs::path(cmd[i]).filename();
            std::ofstream out(repl, std::ios::binary);
            out << text;
            if (!out) throw std::runtime_error("cannot write " + repl.string());
            cmd[i] = repl.string();
        } catch (const std::exception& e) {
            std::cerr << "satcc: warning: " << cmd[i] << ": " << e.what()
                      << "; passing the original file through\n";
        }
    }

    std::vector<char*> argv;
    argv.reserve(cmd.size() + 1);
    for (std::string& s : cmd) argv.push_back(s.data());
    argv.push_back(nullptr);

    pid_t pid = fork();
    if (pid < 0) {
        std::cerr << "satcc: error: fork failed\n";
        return 127;
    }
    if (pid == 0) {
        execvp(argv[0], argv.data());
        std::perror(("satcc: exec " + cmd[0]).c_str());
        _exit(127);
    }
    int status = 0;
    waitpid(pid, &status, 0);

    if (have_dir && !o.keep) {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    // Wrapper mode: everything after a literal "--" is the wrapped command.
    std::vector<std::string> wrapped;
    auto dash = std::find(args.begin(), args.end(), "--");
    bool wrap = dash != args.end();
    if (wrap) {
        wrapped.assign(dash + 1, args.end());
        args.erase(dash, args.end());
    }

    std::string sub = "opt";
    if (!args.empty() && (args[0] == "opt" || args[0] == "verify" || args[0] == "report")) {
        sub = args[0];
        args.erase(args.begin());
    }

    Options o;
    CLI::App app{"equality-saturation optimizer for OpenACC C kernels", "satcc"};
    app.add_option("--variant", o.variant, "optimization variant")
        ->check(CLI::IsMember({"cse", "cse+sat", "cse+bulk", "accsat"}))
        ->capture_default_str();
    app.add_option("--max-nodes", o.max_nodes, "e-node budget for saturation")
        ->capture_default_str();
    app.add_option("--sat-time", o.sat_time, "saturation time limit, seconds")
        ->capture_default_str();
    app.add_option("--iters", o.iters, "saturation iteration limit")->capture_default_str();
    app.add_option("--extract-time", o.extract_time, "exact extraction time limit, seconds")
        ->capture_default_str();
    app.add_option("--extract", o.extract, "extraction algorithm")
        ->check(CLI::IsMember({"ilp", "greedy"}))
        ->capture_default_str();
    app.add_flag("--no-bulk", o.no_bulk, "skip bulk load motion");
    app.add_flag("--no-sat", o.no_sat, "skip saturation (load dedup only)");
    app.add_flag("--keep", o.keep, "keep wrapper temp files under ./satcc-cache");
    app.add_option("--jobs", o.jobs, "files/regions optimized concurrently")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("-o,--output", o.output, "write optimized source here instead of stdout");
    app.add_option("--report-file", o.report_file, "write the JSON report here");
    app.add_option("--trials", o.trials, "verify: differential test trials per region")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--tol-rel", o.tol_rel, "verify: relative tolerance")
        ->capture_default_str();
    app.add_option("files", o.files, "kernel source files");

    try {
        std::vector<char*> fake;
        std::string prog = "satcc";
        fake.push_back(prog.data());
        for (std::string& s : args) fake.push_back(s.data());
        app.parse(static_cast<int>(fake.size()), fake.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (wrap) return wrap_compiler(std::move(wrapped), o);
        if (sub == "verify") return cmd_verify(o);
        if (sub == "report") return cmd_report(o);
        return cmd_opt(o);
    } catch (const std::exception& e) {
        std::cerr << "satcc: error: " << e.what() << "\n";
        return 1;
    }
}
