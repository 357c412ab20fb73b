#include "mvrcg/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "mvrcg/criteria.hpp"
#include "mvrcg/learner.hpp"
#include "mvrcg/rules.hpp"
#include "mvrcg/simulate.hpp"

namespace mvrcg {

MixedGraph essential_graph(const MixedGraph& g) {
    MixedGraph e = g.skeleton();
    for (const auto& t : unshielded_colliders(g)) {
        e.add_arrowhead(t.mid, t.a);
        e.add_arrowhead(t.mid, t.c);
    }
    return apply_rules_lists(std::move(e), judge_from_graph(g));
}

namespace {

void require_same_vertices(const MixedGraph& a, const MixedGraph& b) {
    if (a.labels() != b.labels()) throw DomainError("graphs are over different vertex sets");
}

}  // namespace

int shd(const MixedGraph& a, const MixedGraph& b) {
    require_same_vertices(a, b);
    int d = 0;
    for (Vertex u = 0; u < a.size(); ++u)
        for (Vertex v = u + 1; v < a.size(); ++v)
            if (a.mark(u, v) != b.mark(u, v) || a.mark(v, u) != b.mark(v, u)) ++d;
    return d;
}

MetricsRecord metrics(const MixedGraph& learned, const MixedGraph& truth, double runtime_ms) {
    require_same_vertices(learned, truth);
    MetricsRecord m;
    m.runtime_ms = runtime_ms;
    for (Vertex u = 0; u < truth.size(); ++u)
        for (Vertex v = u + 1; v < truth.size(); ++v) {
            const bool l = learned.adjacent(u, v), t = truth.adjacent(u, v);
            if (l && t) ++m.tp;
            else if (l) ++m.fp;
            else if (t) ++m.fn;
            else ++m.tn;
        }
    const int pos = m.tp + m.fn, neg = m.fp + m.tn, found = m.tp + m.fp;
    m.tpr_undefined = pos == 0;
    m.fpr_undefined = neg == 0;
    m.tdr_undefined = found == 0;
    m.tpr = pos == 0 ? 1.0 : static_cast<double>(m.tp) / pos;
    m.fpr = neg == 0 ? 0.0 : static_cast<double>(m.fp) / neg;
    m.tdr = found == 0 ? 1.0 : static_cast<double>(m.tp) / found;
    m.acc = pos + neg == 0 ? 1.0 : static_cast<double>(m.tp + m.tn) / (pos + neg);
    m.shd = shd(learned, truth);
    return m;
}

void BenchGrid::validate() const {
    if (p_values.empty() || n_values.empty() || alpha_values.empty() || variants.empty())
        throw ConfigError("grid lists must be nonempty");
    if (replicates < 1) throw ConfigError("replicates must be at least 1");
    if (workers < 1) throw ConfigError("workers must be at least 1");
    for (int p : p_values)
        GeneratorParams{p, N, 0, std::nullopt}.validate();
    for (long n : n_values)
        if (n < 1) throw ConfigError("sample sizes must be positive");
    for (double a : alpha_values)
        if (!(a > 0.0 && a < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
    for (const auto& v : variants) LearnerConfig::from_variant(v);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Job {
    int p;
    long n;
    double alpha;
    int replicate;
};

std::vector<BenchRow> run_job(const BenchGrid& grid, const Job& job) {
    std::vector<BenchRow> rows;
    for (const auto& name : grid.variants)
        rows.push_back(BenchRow{name, job.p, job.n, job.alpha, job.replicate, {}, {}});
    try {
        const std::uint64_t gseed = replicate_seed(grid.seed, job.p, job.replicate);
        const MixedGraph truth = random_mvr_cg({job.p, grid.N, gseed, std::nullopt});
        const MixedGraph truth_essential = essential_graph(truth);

        std::shared_ptr<const CITester> base;
        if (grid.oracle) {
            base = std::make_shared<OracleTester>(truth);
        } else {
            const auto ldag = cg_to_dag_with_latents(truth, splitmix(gseed ^ 0x5eedULL));
            const auto data = sample_gaussian(ldag, job.n, splitmix(gseed ^ static_cast<std::uint64_t>(job.n)));
            base = std::make_shared<GaussianTester>(SufficientStats::from_dataset(data), job.alpha);
        }
        for (auto& row : rows) {
            try {
                auto config = LearnerConfig::from_variant(row.variant);
                config.alpha = job.alpha;
                const CachingTester tester(base);
                const auto result = learn(tester, truth.labels(), config);
                row.metrics = metrics(result.essential, truth_essential, result.diagnostics.runtime_ms);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    } catch (const std::exception& e) {
        for (auto& row : rows) row.error = e.what();
    }
    return rows;
}

Summary summarize(const std::vector<double>& xs) {
    Summary s;
    if (xs.empty()) return s;
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        for (double x : xs) s.variance += (x - s.mean) * (x - s.mean);
        s.variance /= static_cast<double>(xs.size() - 1);
    }
    return s;
}

std::string num(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

}  // namespace

std::uint64_t replicate_seed(std::uint64_t base, int p, int replicate) {
    return splitmix(splitmix(base ^ splitmix(static_cast<std::uint64_t>(p))) + static_cast<std::uint64_t>(replicate));
}

BenchResult run_benchmark(const BenchGrid& grid) {
    grid.validate();
    std::vector<Job> jobs;
    for (int p : grid.p_values)
        for (long n : grid.n_values)
            for (double a : grid.alpha_values)
                for (int r = 0; r < grid.replicates; ++r) jobs.push_back({p, n, a, r});

    std::vector<std::vector<BenchRow>> slots(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) slots[i] = run_job(grid, jobs[i]);
    };
    const int threads = std::min<int>(grid.workers, static_cast<int>(jobs.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    BenchResult out;
    for (auto& s : slots)
        for (auto& row : s) out.rows.push_back(std::move(row));

    using Key = std::tuple<int, long, double, std::string>;
    std::map<Key, std::vector<const BenchRow*>> groups;
    std::vector<Key> key_order;
    for (const auto& row : out.rows) {
        Key key{row.p, row.n, row.alpha, row.variant};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) key_order.push_back(key);
        it->second.push_back(&row);
    }
    for (const auto& key : key_order) {
        BenchCell cell;
        std::tie(cell.p, cell.n, cell.alpha, cell.variant) = key;
        std::vector<double> tpr, fpr, tdr, acc, sh, rt;
        for (const BenchRow* row : groups[key]) {
            if (!row->error.empty()) {
                ++cell.failed;
                continue;
            }
            ++cell.completed;
            tpr.push_back(row->metrics.tpr);
            fpr.push_back(row->metrics.fpr);
            tdr.push_back(row->metrics.tdr);
            acc.push_back(row->metrics.acc);
            sh.push_back(row->metrics.shd);
            rt.push_back(row->metrics.runtime_ms);
        }
        cell.tpr = summarize(tpr);
        cell.fpr = summarize(fpr);
        cell.tdr = summarize(tdr);
        cell.acc = summarize(acc);
        cell.shd = summarize(sh);
        cell.runtime_ms = summarize(rt);
        out.cells.push_back(std::move(cell));
    }
    return out;
}

std::string format_bench_csv(const BenchResult& result, bool with_runtime) {
    std::string out = "variant,p,n,alpha,replicate,tpr,fpr,tdr,acc,shd,runtime_ms\n";
    for (const auto& r : result.rows) {
        if (!r.error.empty()) continue;
        const auto& m = r.metrics;
        out += r.variant + "," + std::to_string(r.p) + "," + std::to_string(r.n) + "," + num(r.alpha) + "," +
               std::to_string(r.replicate) + "," + num(m.tpr) + "," + num(m.fpr) + "," + num(m.tdr) + "," +
               num(m.acc) + "," + std::to_string(m.shd) + "," + num(with_runtime ? m.runtime_ms : 0.0) + "\n";
    }
    return out;
}

std::string format_bench_summary(const BenchResult& result, bool with_runtime) {
    auto summary = [](const Summary& s) { return nlohmann::json{{"mean", s.mean}, {"variance", s.variance}}; };
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : result.cells) {
        cells.push_back({{"variant", c.variant},
                         {"p", c.p},
                         {"n", c.n},
                         {"alpha", c.alpha},
                         {"completed", c.completed},
                         {"failed", c.failed},
                         {"tpr", summary(c.tpr)},
                         {"fpr", summary(c.fpr)},
                         {"tdr", summary(c.tdr)},
                         {"acc", summary(c.acc)},
                         {"shd", summary(c.shd)},
                         {"runtime_ms", with_runtime ? summary(c.runtime_ms) : summary(Summary{})}});
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : result.rows)
        if (!r.error.empty())
            failures.push_back({{"variant", r.variant}, {"p", r.p}, {"n", r.n}, {"alpha", r.alpha},
                                {"replicate", r.replicate}, {"error", r.error}});
    return nlohmann::json{{"cells", cells}, {"failures", failures}}.dump(2) + "\n";
}

BenchGrid parse_bench_grid(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("grid: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("grid: expected a JSON object");
    static const std::vector<std::string> known{"p", "n", "alpha", "N", "replicates", "variants", "seed", "oracle", "workers"};
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError("grid: unknown key '" + key + "'");
    BenchGrid g;
    try {
        if (j.contains("p")) g.p_values = j["p"].get<std::vector<int>>();
        if (j.contains("n")) g.n_values = j["n"].get<std::vector<long>>();
        if (j.contains("alpha")) g.alpha_values = j["alpha"].get<std::vector<double>>();
        if (j.contains("N")) g.N = j["N"].get<double>();
        if (j.contains("replicates")) g.replicates = j["replicates"].get<int>();
        if (j.contains("variants")) g.variants = j["variants"].get<std::vector<std::string>>();
        if (j.contains("seed")) g.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("oracle")) g.oracle = j["oracle"].get<bool>();
        if (j.contains("workers")) g.workers = j["workers"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("grid: ") + e.what());
    }
    g.validate();
    return g;
}

}  // namespace mvrcg
