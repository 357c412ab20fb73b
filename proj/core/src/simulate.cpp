#include "mvrcg/simulate.hpp"

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "mvrcg/criteria.hpp"

namespace mvrcg {

void GeneratorParams::validate() const {
    if (p < 1) throw DomainError("p must be at least 1");
    if (!(N >= 0.0) || (p > 1 && N > p - 1)) throw DomainError("N must lie in [0, p-1]");
    if (k && (*k < 1 || *k > p)) throw DomainError("k must lie in [1, p]");
}

std::vector<int> component_sizes(int p, int k) {
    if (k < 1 || k > p) throw DomainError("k must lie in [1, p]");
    std::vector<int> sizes(static_cast<std::size_t>(k), p / k);
    for (int i = 0; i < p % k; ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

MixedGraph random_mvr_cg(const GeneratorParams& params) {
    params.validate();
    const int p = params.p;
    std::mt19937_64 rng(params.seed);
    MixedGraph g = MixedGraph::with_size(p);
    if (p == 1) return g;

    const double s = params.N / (p - 1);
    std::bernoulli_distribution coin(s);
    // lower triangle, row by row
    std::vector<char> a(static_cast<std::size_t>(p * p), 0);
    for (int i = 1; i < p; ++i)
        for (int j = 0; j < i; ++j) a[static_cast<std::size_t>(i * p + j)] = coin(rng) ? 1 : 0;

    const int k = params.k ? *params.k : std::uniform_int_distribution<int>(1, p)(rng);
    std::vector<int> block(static_cast<std::size_t>(p));
    int v = 0, b = 0;
    for (int size : component_sizes(p, k)) {
        for (int t = 0; t < size; ++t) block[static_cast<std::size_t>(v++)] = b;
        ++b;
    }

    for (int i = 1; i < p; ++i)
        for (int j = 0; j < i; ++j) {
            if (!a[static_cast<std::size_t>(i * p + j)]) continue;
            // j < i, so j's block is never later than i's
            if (block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)]) g.add_bidirected(j, i);
            else g.add_directed(j, i);
        }
    return g;
}

std::vector<Vertex> topological_order(const MixedGraph& dag) {
    const int p = dag.size();
    std::vector<int> indegree(static_cast<std::size_t>(p), 0);
    std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(p));
    for (const Edge& e : dag.edges()) {
        if (e.kind() != EdgeKind::directed) throw DomainError("expected a graph with directed edges only");
        const bool forward = e.at_v == Mark::arrow;
        const Vertex from = forward ? e.u : e.v, to = forward ? e.v : e.u;
        children[static_cast<std::size_t>(from)].push_back(to);
        ++indegree[static_cast<std::size_t>(to)];
    }
    // smallest ready vertex first keeps the order reproducible
    std::vector<Vertex> order;
    std::vector<char> done(static_cast<std::size_t>(p), 0);
    while (static_cast<int>(order.size()) < p) {
        Vertex next = -1;
        for (Vertex u = 0; u < p; ++u)
            if (!done[static_cast<std::size_t>(u)] && indegree[static_cast<std::size_t>(u)] == 0) {
                next = u;
                break;
            }
        if (next < 0) throw DomainError("graph has a directed cycle");
        done[static_cast<std::size_t>(next)] = 1;
        order.push_back(next);
        for (Vertex c : children[static_cast<std::size_t>(next)]) --indegree[static_cast<std::size_t>(c)];
    }
    return order;
}

LatentDag cg_to_dag_with_latents(const MixedGraph& g, std::uint64_t seed) {
    if (g.has_undirected_edges()) throw DomainError("undirected edges have no latent-variable expansion");
    if (has_partially_directed_cycle(g)) throw DomainError("graph has a partially directed cycle");

    const auto edges = g.edges();
    std::vector<std::string> labels = g.labels();
    std::vector<std::pair<Vertex, Vertex>> bidirected;
    for (const Edge& e : edges)
        if (e.kind() == EdgeKind::bidirected) bidirected.emplace_back(e.u, e.v);

    const std::set<std::string> taken(labels.begin(), labels.end());
    auto fresh = [&](int i) {
        std::string name = "H" + std::to_string(i);
        while (taken.contains(name)) name = "_" + name;
        return name;
    };
    for (std::size_t i = 0; i < bidirected.size(); ++i) labels.push_back(fresh(static_cast<int>(i) + 1));

    LatentDag out;
    out.dag = MixedGraph(labels);
    for (Vertex v = 0; v < g.size(); ++v) out.observed.push_back(v);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> magnitude(0.5, 1.5);
    std::bernoulli_distribution negative(0.5);
    auto weight = [&] {
        const double m = magnitude(rng);
        return negative(rng) ? -m : m;
    };

    std::size_t next_latent = 0;
    for (const Edge& e : edges) {
        if (e.kind() == EdgeKind::directed) {
            const bool forward = e.at_v == Mark::arrow;
            const Vertex from = forward ? e.u : e.v, to = forward ? e.v : e.u;
            out.dag.add_directed(from, to);
            out.weights[{from, to}] = weight();
        } else {
            const Vertex h = g.size() + static_cast<Vertex>(next_latent++);
            out.latents.push_back(h);
            out.dag.add_directed(h, e.u);
            out.dag.add_directed(h, e.v);
            out.weights[{h, e.u}] = weight();
            out.weights[{h, e.v}] = weight();
        }
    }
    out.noise_variance.assign(static_cast<std::size_t>(out.dag.size()), 1.0);
    return out;
}

Dataset sample_gaussian(const LatentDag& ldag, long n, std::uint64_t seed) {
    if (n < 1) throw DomainError("sample size must be at least 1");
    const int q = ldag.dag.size();
    const auto order = topological_order(ldag.dag);
    std::vector<std::vector<std::pair<Vertex, double>>> parents(static_cast<std::size_t>(q));
    for (const auto& [edge, w] : ldag.weights) parents[static_cast<std::size_t>(edge.second)].emplace_back(edge.first, w);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd full(n, q);
    for (long r = 0; r < n; ++r) {
        for (Vertex v : order) {
            double x = std::sqrt(ldag.noise_variance[static_cast<std::size_t>(v)]) * normal(rng);
            for (const auto& [u, w] : parents[static_cast<std::size_t>(v)]) x += w * full(r, u);
            full(r, v) = x;
        }
    }

    Dataset data;
    data.rows.resize(n, static_cast<Eigen::Index>(ldag.observed.size()));
    for (std::size_t c = 0; c < ldag.observed.size(); ++c) {
        const Vertex v = ldag.observed[c];
        data.columns.push_back(ldag.dag.label(v));
        data.rows.col(static_cast<Eigen::Index>(c)) = full.col(v);
    }
    return data;
}

}  // namespace mvrcg
