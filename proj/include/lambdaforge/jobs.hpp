#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "lambdaforge/config.hpp"
#include "lambdaforge/report.hpp"

namespace lforge {

inline constexpr const char* kToolVersion = "0.1.0";

struct JobOptions {
    std::string out_dir;                 // empty: nothing written to disk
    int threads = 0;                     // 0: LAMBDA_FORGE_THREADS, else 1
    std::optional<std::uint64_t> seed;   // overrides the config seed
    bool strict = false;
};

struct JobResult {
    Report report;
    bool pass = true;
};

// commands: verify, perturb, restore, decompose, path, scan, weil, fit, grid
JobResult run_job(const std::string& command, const Config& cfg, const JobOptions& options);

// chunk-free worker pool; results must be keyed by index so the outcome is
// independent of the thread count
void parallel_for(int n, int threads, const std::function<void(int)>& body);

int resolve_threads(int requested);

}  // namespace lforge
