#pragma once

#include <string>
#include <utility>
#include <vector>

#include "satcc/extract.hpp"
#include "satcc/rules.hpp"

namespace satcc {

// Ablation switches. Load dedup (CSE) is inherent to graph construction and
// always on; saturation and bulk load motion toggle independently.
struct VariantConfig {
    bool sat = true;
    bool bulk = true;

    std::string name() const;                              // cse, cse+sat, cse+bulk, accsat
    static VariantConfig from_name(const std::string& s);  // throws std::invalid_argument
};

struct PipelineLimits {
    SaturationLimits sat;
    ExtractLimits extract;
    ExtractMethod method = ExtractMethod::Ilp;  // exact selection, greedy on timeout
    int jobs = 1;                               // regions optimized concurrently
};

// Everything measured while optimizing one region.
struct RegionMetrics {
    int region_index = 0;
    std::string function;
    double ssa_ms = 0.0;
    double sat_ms = 0.0;
    double extract_ms = 0.0;
    int nodes_final = 0;
    std::string stop_reason;          // saturation outcome, or "disabled"
    long long objective_before = 0;   // cost of the original selection
    long long objective_after = 0;    // cost of the chosen extraction
    int static_loads_before = 0;      // syntactic array reads in the region
    int static_loads_after = 0;       // same count over the emitted region
    int static_stores = 0;
    int fma_count = 0;                // fused nodes in the chosen extraction
    std::string method;               // selection algorithm that produced the result
    bool timed_out = false;
    std::string error;                // nonempty: region left untouched (fail-open)
};

struct FileMetrics {
    std::string file;
    std::string variant;
    std::vector<RegionMetrics> regions;
};

// Counts syntactic array reads under a statement (store subscripts included,
// store targets themselves excluded). The before/after load metrics both use
// this, applied to the original and the re-parsed emitted region.
int count_static_loads(const Stmt& s);

// Optimizes every directive-marked region of `source`, returning the emitted
// module text and per-region metrics. Regions whose optimization throws are
// left untouched and carry the message in their metrics entry. A module with
// no regions (or no surviving rewrites) returns `source` byte-for-byte.
std::pair<std::string, FileMetrics> optimize_source(const std::string& source,
                                                    const std::string& name, VariantConfig variant,
                                                    const PipelineLimits& lim = {});

// optimize_source over a file path. Throws SyntaxError when the file does not
// parse and std::runtime_error when it cannot be read.
std::pair<std::string, FileMetrics> optimize_file(const std::string& path, VariantConfig variant,
                                                  const PipelineLimits& lim = {});

}  // namespace satcc
