#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mvrcg/criteria.hpp"
#include "mvrcg/dataset.hpp"
#include "mvrcg/evaluate.hpp"
#include "mvrcg/graph_io.hpp"
#include "mvrcg/learner.hpp"
#include "mvrcg/simulate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace mvrcg::cli {
namespace {

int env_workers() {
    const char* s = std::getenv("MVRCG_WORKERS");
    if (!s || !*s) return 1;
    try {
        const int w = std::stoi(s);
        if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    throw ConfigError("MVRCG_WORKERS must be a positive integer");
}

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Manifest written beside the outputs of every run.
struct Manifest {
    std::string command;
    json parameters = json::object();
    json seeds = json::object();
    json inputs = json::array();
    json outputs = json::array();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write(const fs::path& path) const {
        json j{{"command", command},
               {"parameters", parameters},
               {"seeds", seeds},
               {"inputs", inputs},
               {"outputs", outputs},
               {"tool_version", version},
               {"started_utc", utc_now()},
               {"wall_clock_ms",
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
        write_file_atomic(path, j.dump(2) + "\n");
    }
};

fs::path with_suffix(const fs::path& p, const std::string& suffix) { return fs::path(p.string() + suffix); }

Ordering parse_order(const std::string& spec, const std::vector<std::string>& labels) {
    const int p = static_cast<int>(labels.size());
    if (spec == "asis") return identity_ordering(p);
    if (spec.starts_with("seed:")) {
        std::uint64_t k = 0;
        try {
            std::size_t used = 0;
            k = std::stoull(spec.substr(5), &used);
            if (used != spec.size() - 5) throw std::invalid_argument(spec);
        } catch (const std::exception&) {
            throw ConfigError("--order seed:<k> needs a nonnegative integer");
        }
        Ordering o = identity_ordering(p);
        std::mt19937_64 rng(k);
        std::shuffle(o.begin(), o.end(), rng);
        return o;
    }
    if (spec.starts_with("file:")) {
        std::string text = read_file(spec.substr(5));
        std::replace(text.begin(), text.end(), ',', ' ');
        std::istringstream in(text);
        Ordering o;
        for (std::string name; in >> name;) {
            auto it = std::find(labels.begin(), labels.end(), name);
            if (it == labels.end()) throw ConfigError("ordering file names unknown variable '" + name + "'");
            o.push_back(static_cast<Vertex>(it - labels.begin()));
        }
        validate_ordering(o, p);
        return o;
    }
    throw ConfigError("--order must be asis, seed:<k> or file:<path>");
}

int cmd_generate(const GeneratorParams& params, const fs::path& out, std::ostream& log) {
    Manifest m{"generate"};
    const auto g = random_mvr_cg(params);
    write_edge_list(out, g);
    m.parameters = {{"p", params.p}, {"N", params.N}};
    if (params.k) m.parameters["k"] = *params.k;
    m.seeds = {{"graph", params.seed}};
    m.outputs.push_back(out.string());
    m.write(with_suffix(out, ".manifest.json"));
    log << "wrote " << out.string() << " (" << g.size() << " vertices, " << g.edge_count() << " edges)\n";
    return ok;
}

int cmd_sample(const fs::path& graph_path, long n, std::uint64_t seed, const fs::path& out, std::ostream& log) {
    Manifest m{"sample"};
    const auto g = read_edge_list(graph_path);
    const auto ldag = cg_to_dag_with_latents(g, seed);
    const auto data = sample_gaussian(ldag, n, seed + 1);
    write_csv(out, data);
    m.parameters = {{"n", n}, {"latent_count", ldag.latents.size()}};
    m.seeds = {{"weights", seed}, {"noise", seed + 1}};
    m.inputs.push_back(graph_path.string());
    m.outputs.push_back(out.string());
    m.write(with_suffix(out, ".manifest.json"));
    log << "wrote " << out.string() << " (" << n << " rows, " << ldag.latents.size() << " latents marginalized)\n";
    return ok;
}

struct LearnArgs {
    std::string data, oracle, variant = "stable-lmpc", order = "asis", out_prefix = "learned";
    double alpha = 0.005;
    std::optional<double> mpc_lo, mpc_hi;
    bool trace = false;
};

int cmd_learn(const LearnArgs& a, std::ostream& log) {
    Manifest m{"learn"};
    LearnerConfig config = LearnerConfig::from_variant(a.variant);
    config.alpha = a.alpha;
    if (a.mpc_lo) config.majority.lo = *a.mpc_lo;
    if (a.mpc_hi) config.majority.hi = *a.mpc_hi;
    if ((a.mpc_lo || a.mpc_hi) && config.triples != TripleMode::majority)
        throw ConfigError("--mpc-lo/--mpc-hi need a majority-rule variant");
    config.workers = env_workers();
    config.record_trace = a.trace;

    std::shared_ptr<const CITester> base;
    std::vector<std::string> labels;
    if (!a.oracle.empty()) {
        auto truth = read_edge_list(a.oracle);
        if (has_partially_directed_cycle(truth)) throw DomainError("oracle graph has a partially directed cycle");
        labels = truth.labels();
        base = std::make_shared<OracleTester>(std::move(truth));
        m.inputs.push_back({{"oracle", a.oracle}});
    } else {
        const auto data = read_csv(a.data);
        labels = data.columns;
        base = std::make_shared<GaussianTester>(SufficientStats::from_dataset(data), a.alpha);
        m.inputs.push_back({{"data", a.data}});
    }
    config.ordering = parse_order(a.order, labels);
    const CachingTester tester(base);
    const auto result = learn(tester, labels, config);

    const fs::path prefix = a.out_prefix;
    const auto essential_path = with_suffix(prefix, ".essential.graph");
    const auto final_path = with_suffix(prefix, ".final.graph");
    const auto diag_path = with_suffix(prefix, ".diagnostics.json");
    write_edge_list(essential_path, result.essential);
    m.outputs.push_back(essential_path.string());
    if (result.final_graph) {
        write_edge_list(final_path, *result.final_graph);
        m.outputs.push_back(final_path.string());
    } else {
        log << "warning: no final chain graph: " << result.diagnostics.final_error << "\n";
    }
    auto diag = json::parse(diagnostics_json(result, config, labels));
    if (a.trace) {
        json trace = json::array();
        for (const auto& t : result.trace) {
            json adj = json::array(), sep = json::array();
            for (Vertex v : t.adjacency) adj.push_back(labels[static_cast<std::size_t>(v)]);
            for (Vertex v : t.sepset) sep.push_back(labels[static_cast<std::size_t>(v)]);
            trace.push_back({{"level", t.level},
                             {"u", labels[static_cast<std::size_t>(t.u)]},
                             {"v", labels[static_cast<std::size_t>(t.v)]},
                             {"adjacency", adj},
                             {"eligible", t.eligible},
                             {"removed", t.removed},
                             {"sepset", sep}});
        }
        diag["trace"] = trace;
    }
    write_file_atomic(diag_path, diag.dump(2) + "\n");
    m.outputs.push_back(diag_path.string());

    m.parameters = {{"variant", config.variant_name()}, {"alpha", a.alpha}, {"order", a.order}};
    if (config.triples == TripleMode::majority) m.parameters["majority"] = {config.majority.lo, config.majority.hi};
    if (a.order.starts_with("seed:")) m.seeds = {{"order", a.order.substr(5)}};
    m.write(with_suffix(prefix, ".manifest.json"));
    log << "learned " << result.essential.edge_count() << " edges with " << result.diagnostics.tests_performed
        << " tests\n";
    return ok;
}

int cmd_bench(const fs::path& grid_path, const std::string& out_prefix, bool deterministic, std::ostream& log) {
    Manifest m{"bench"};
    BenchGrid grid = parse_bench_grid(read_file(grid_path));
    grid.workers = env_workers();
    const auto result = run_benchmark(grid);

    const fs::path prefix = out_prefix;
    const auto csv_path = with_suffix(prefix, ".csv");
    const auto summary_path = with_suffix(prefix, ".summary.json");
    write_file_atomic(csv_path, format_bench_csv(result, !deterministic));
    write_file_atomic(summary_path, format_bench_summary(result, !deterministic));

    std::size_t failed = 0;
    for (const auto& r : result.rows)
        if (!r.error.empty()) ++failed;
    m.parameters = json::parse(read_file(grid_path));
    m.parameters["deterministic"] = deterministic;
    m.seeds = {{"base", grid.seed}};
    m.inputs.push_back(grid_path.string());
    m.outputs = {csv_path.string(), summary_path.string()};
    m.write(with_suffix(prefix, ".manifest.json"));
    log << "ran " << result.rows.size() << " learner runs, " << failed << " failed\n";
    for (const auto& r : result.rows)
        if (!r.error.empty())
            log << "  failed: " << r.variant << " p=" << r.p << " n=" << r.n << " rep=" << r.replicate << ": " << r.error
                << "\n";
    return !result.rows.empty() && failed == result.rows.size() ? input_error : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"PC-like structure learning for multivariate regression chain graphs", "mvrcg"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    GeneratorParams gen;
    int k = 0;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "random MVR chain graph as an edge list");
    generate->add_option("--p", gen.p, "vertex count")->required();
    generate->add_option("--N", gen.N, "expected vertex degree")->capture_default_str();
    generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    generate->add_option("--k", k, "chain component count (random when omitted)");
    generate->add_option("--out", gen_out, "output graph file")->required();

    std::string sample_graph, sample_out;
    long sample_n = 0;
    std::uint64_t sample_seed = 0;
    auto* sample = app.add_subcommand("sample", "Gaussian sample from a chain graph, latents marginalized");
    sample->add_option("--graph", sample_graph, "input graph file")->required();
    sample->add_option("--n", sample_n, "sample size")->required();
    sample->add_option("--seed", sample_seed, "RNG seed")->capture_default_str();
    sample->add_option("--out", sample_out, "output CSV")->required();

    LearnArgs la;
    double mpc_lo = 0, mpc_hi = 0;
    auto* learn_cmd = app.add_subcommand("learn", "learn an essential graph from data or an oracle graph");
    auto* data_opt = learn_cmd->add_option("--data", la.data, "CSV dataset");
    auto* oracle_opt = learn_cmd->add_option("--oracle", la.oracle, "true graph answering m-separation queries");
    data_opt->excludes(oracle_opt);
    oracle_opt->excludes(data_opt);
    learn_cmd->add_option("--variant", la.variant, "one of: " + [] {
        const auto v = known_variants();
        return std::accumulate(std::next(v.begin()), v.end(), v.front(),
                               [](std::string a, const std::string& b) { return a + ", " + b; });
    }())->capture_default_str();
    learn_cmd->add_option("--alpha", la.alpha, "significance level")->capture_default_str();
    learn_cmd->add_option("--order", la.order, "asis | seed:<k> | file:<path>")->capture_default_str();
    auto* lo_opt = learn_cmd->add_option("--mpc-lo", mpc_lo, "majority lower threshold, percent");
    auto* hi_opt = learn_cmd->add_option("--mpc-hi", mpc_hi, "majority upper threshold, percent");
    learn_cmd->add_option("--out-prefix", la.out_prefix, "output path prefix")->capture_default_str();
    learn_cmd->add_flag("--trace", la.trace, "record the skeleton search trace in the diagnostics");

    std::string grid_path, bench_prefix = "bench";
    bool deterministic = false;
    auto* bench = app.add_subcommand("bench", "benchmark grid over random graphs");
    bench->add_option("--grid", grid_path, "grid JSON")->required();
    bench->add_option("--out-prefix", bench_prefix, "output path prefix")->capture_default_str();
    bench->add_flag("--deterministic", deterministic, "write zero runtimes so reruns are byte-identical");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*generate) {
            if (generate->count("--k")) gen.k = k;
            return cmd_generate(gen, gen_out, out);
        }
        if (*sample) return cmd_sample(sample_graph, sample_n, sample_seed, sample_out, out);
        if (*learn_cmd) {
            if (la.data.empty() == la.oracle.empty()) {
                err << "learn: exactly one of --data and --oracle is required\n";
                return usage;
            }
            if (lo_opt->count()) la.mpc_lo = mpc_lo;
            if (hi_opt->count()) la.mpc_hi = mpc_hi;
            return cmd_learn(la, out);
        }
        if (*bench) return cmd_bench(grid_path, bench_prefix, deterministic, out);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const ConfigError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const IoError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const fs::filesystem_error& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return usage;
}

}  // namespace mvrcg::cli
