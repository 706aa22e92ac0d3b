#include "satcc/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "satcc/codegen.hpp"
#include "satcc/diag.hpp"
#include "satcc/parser.hpp"
#include "satcc/ssa.hpp"

namespace satcc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int count_loads_expr(const Expr& e) {
    int n = e.kind == ExprKind::ArrayRef ? 1 : 0;
    for (auto& k : e.kids) n += count_loads_expr(*k);
    return n;
}

int count_stores(const Stmt& s) {
    int n = s.kind == StmtKind::Assign && s.lhs->kind == ExprKind::ArrayRef ? 1 : 0;
    if (s.then_s) n += count_stores(*s.then_s);
    if (s.else_s) n += count_stores(*s.else_s);
    if (s.init) n += count_stores(*s.init);
    if (s.step) n += count_stores(*s.step);
    if (s.body) n += count_stores(*s.body);
    for (auto& c : s.stmts) n += count_stores(*c);
    return n;
}

struct RegionResult {
    RegionMetrics metrics;
    StmtPtr body;  // null: leave the region untouched
};

RegionResult optimize_region(const KernelModule& m, const Region& region, VariantConfig variant,
                             const PipelineLimits& lim) {
    RegionResult out;
    RegionMetrics& met = out.metrics;
    met.region_index = region.index;
    met.function = region.fn->name;
    met.static_loads_before = count_static_loads(*region.anchor->body);
    met.static_loads_after = met.static_loads_before;
    met.static_stores = count_stores(*region.anchor->body);

    auto t0 = Clock::now();
    SsaProgram prog = build_ssa(region, module_symbols(m, *region.fn));
    SsaGraph sg = from_ssa(prog);
    met.ssa_ms = ms_since(t0);

    // Cost of the program as written: on the freshly built graph every class
    // holds exactly one node, so greedy selection is the original selection.
    met.objective_before = extract_greedy(sg.g, sg.roots, CostModel{}).objective.total;

    if (variant.sat) {
        t0 = Clock::now();
        SaturationReport rep = saturate(sg.g, default_rules(), lim.sat);
        met.sat_ms = ms_since(t0);
        met.nodes_final = static_cast<int>(rep.nodes_final);
        met.stop_reason = stop_reason_name(rep.stop_reason);
    } else {
        met.nodes_final = static_cast<int>(sg.g.n_nodes());
        met.stop_reason = "disabled";
    }

    t0 = Clock::now();
    Extraction x = lim.method == ExtractMethod::Ilp
                       ? extract_ilp(sg.g, sg.roots, CostModel{}, lim.extract)
                       : extract_greedy(sg.g, sg.roots, CostModel{});
    met.extract_ms = ms_since(t0);
    met.objective_after = x.objective.total;
    met.method = method_name(x.method);
    met.timed_out = x.timed_out;
    for (auto& [c, n] : x.choice)
        if (n.op == Op::Fma) met.fma_count++;

    EmitPlan plan = plan_temporaries(x, sg, prog);
    if (variant.bulk) bulk_load_reorder(plan, x, sg, prog);
    out.body = build_region_body(prog, plan);
    return out;
}

}  // namespace

std::string VariantConfig::name() const {
    if (sat && bulk) return "accsat";
    if (sat) return "cse+sat";
    if (bulk) return "cse+bulk";
    return "cse";
}

VariantConfig VariantConfig::from_name(const std::string& s) {
    if (s == "accsat") return {true, true};
    if (s == "cse+sat") return {true, false};
    if (s == "cse+bulk") return {false, true};
    if (s == "cse") return {false, false};
    throw std::invalid_argument("unknown variant: " + s +
                                " (expected cse, cse+sat, cse+bulk, or accsat)");
}

int count_static_loads(const Stmt& s) {
    int n = 0;
    if (s.kind == StmtKind::Assign) {
        // A store's subscripts read memory only through nested references;
        // the stored cell itself is written, not loaded.
        if (s.lhs->kind == ExprKind::ArrayRef) {
            for (auto& idx : s.lhs->kids) n += count_loads_expr(*idx);
        } else if (s.lhs) {
            n += count_loads_expr(*s.lhs);
        }
    } else if (s.lhs) {
        n += count_loads_expr(*s.lhs);
    }
    if (s.rhs) n += count_loads_expr(*s.rhs);
    if (s.cond) n += count_loads_expr(*s.cond);
    if (s.for_cond) n += count_loads_expr(*s.for_cond);
    if (s.call) n += count_loads_expr(*s.call);
    for (auto& d : s.decls)
        if (d.init) n += count_loads_expr(*d.init);
    if (s.then_s) n += count_static_loads(*s.then_s);
    if (s.else_s) n += count_static_loads(*s.else_s);
    if (s.init) n += count_static_loads(*s.init);
    if (s.step) n += count_static_loads(*s.step);
    if (s.body) n += count_static_loads(*s.body);
    for (auto& c : s.stmts) n += count_static_loads(*c);
    return n;
}

std::pair<std::string, FileMetrics> optimize_source(const std::string& source,
                                                    const std::string& name, VariantConfig variant,
                                                    const PipelineLimits& lim) {
    KernelModule m = parse(source, name);
    std::vector<Region> regions = find_regions(m);

    FileMetrics metrics;
    metrics.file = name;
    metrics.variant = variant.name();
    if (regions.empty()) return {source, std::move(metrics)};

    std::vector<RegionResult> results(regions.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < regions.size(); i = next.fetch_add(1)) {
            try {
                results[i] = optimize_region(m, regions[i], variant, lim);
            } catch (const std::exception& e) {
                results[i].metrics.region_index = regions[i].index;
                results[i].metrics.function = regions[i].fn->name;
                results[i].metrics.error = e.what();
                results[i].body = nullptr;
            }
        }
    };
    int jobs = std::max(1, std::min<int>(lim.jobs, static_cast<int>(regions.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<std::pair<Stmt*, StmtPtr>> bodies;
    for (size_t i = 0; i < regions.size(); ++i)
        if (results[i].body) bodies.emplace_back(regions[i].anchor, std::move(results[i].body));

    std::string text;
    if (bodies.empty()) {
        text = source;  // nothing rewritten: hand back the input bytes
    } else {
        text = emit_module(m, std::move(bodies));
        // Re-parse what we emitted to recount loads on equal footing.
        KernelModule m2 = parse(text, name);
        std::vector<Region> regions2 = find_regions(m2);
        if (regions2.size() == regions.size())
            for (size_t i = 0; i < regions.size(); ++i)
                if (results[i].metrics.error.empty())
                    results[i].metrics.static_loads_after =
                        count_static_loads(*regions2[i].anchor->body);
    }
    for (auto& r : results) metrics.regions.push_back(std::move(r.metrics));
    return {std::move(text), std::move(metrics)};
}

std::pair<std::string, FileMetrics> optimize_file(const std::string& path, VariantConfig variant,
                                                  const PipelineLimits& lim) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return optimize_source(ss.str(), path, variant, lim);
}

}  // namespace satcc
