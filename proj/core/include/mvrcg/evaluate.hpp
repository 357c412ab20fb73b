#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvrcg/graph.hpp"

namespace mvrcg {

/// Skeleton of `g`, arrowheads of its unshielded colliders, then closure
/// under the list-mode orientation rules with `g` judging noncolliders.
/// `g` must be an MVR chain graph.
MixedGraph essential_graph(const MixedGraph& g);

struct MetricsRecord {
    double tpr = 1.0;
    double fpr = 0.0;
    double tdr = 1.0;
    double acc = 1.0;
    int shd = 0;
    double runtime_ms = 0.0;
    // raw counts on skeleton adjacencies
    int tp = 0, fp = 0, tn = 0, fn = 0;
    bool tpr_undefined = false;  // truth has no edges; tpr set to 1
    bool tdr_undefined = false;  // learned graph has no edges; tdr set to 1
    bool fpr_undefined = false;  // truth is complete; fpr set to 0
};

/// Number of vertex pairs that differ in adjacency, plus pairs adjacent in
/// both whose mark pattern differs. DomainError on different vertex labels.
int shd(const MixedGraph& a, const MixedGraph& b);

MetricsRecord metrics(const MixedGraph& learned_essential, const MixedGraph& true_essential, double runtime_ms = 0.0);

struct BenchGrid {
    std::vector<int> p_values{10};
    std::vector<long> n_values{1000};
    std::vector<double> alpha_values{0.005};
    double N = 2.0;
    int replicates = 30;
    std::vector<std::string> variants{"stable-lmpc"};
    std::uint64_t seed = 1;
    bool oracle = false;  // m-separation answers instead of sampled data
    int workers = 1;

    void validate() const;
};

struct BenchRow {
    std::string variant;
    int p = 0;
    long n = 0;
    double alpha = 0.0;
    int replicate = 0;
    MetricsRecord metrics;
    std::string error;  // non-empty when this replicate failed
};

struct Summary {
    double mean = 0.0;
    double variance = 0.0;  // sample variance; 0 with fewer than two values
};

struct BenchCell {
    std::string variant;
    int p = 0;
    long n = 0;
    double alpha = 0.0;
    int completed = 0;
    int failed = 0;
    Summary tpr, fpr, tdr, acc, shd, runtime_ms;
};

struct BenchResult {
    std::vector<BenchRow> rows;  // grid order: p, n, alpha, replicate, variant
    std::vector<BenchCell> cells;
};

/// Seed of one replicate's graph (and, mixed with n, its sample).
std::uint64_t replicate_seed(std::uint64_t base, int p, int replicate);

/// Runs every cell of the grid. Replicates are spread over grid.workers
/// threads; output does not depend on the worker count.
BenchResult run_benchmark(const BenchGrid& grid);

/// Columns variant,p,n,alpha,replicate,tpr,fpr,tdr,acc,shd,runtime_ms.
/// Failed replicates are omitted. `with_runtime` false writes 0 runtimes.
std::string format_bench_csv(const BenchResult& result, bool with_runtime = true);
std::string format_bench_summary(const BenchResult& result, bool with_runtime = true);

/// Reads a grid from JSON: {"p": [...], "n": [...], "alpha": [...], "N": 2,
/// "replicates": 30, "variants": [...], "seed": 1, "oracle": false}.
BenchGrid parse_bench_grid(const std::string& json_text);

}  // namespace mvrcg
