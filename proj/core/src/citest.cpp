#include "mvrcg/citest.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>

#include "mvrcg/criteria.hpp"

namespace mvrcg {
namespace {

constexpr double kRhoClamp = 1e-12;

}  // namespace

CIDecision CITester::test(Vertex u, Vertex v, VertexSet s) const {
    if (u == v) throw DomainError("CI query needs two distinct variables");
    s = make_set(std::move(s));
    if (set_contains(s, u) || set_contains(s, v)) throw DomainError("CI query conditioning set contains an endpoint");
    calls_.fetch_add(1, std::memory_order_relaxed);
    return evaluate(std::min(u, v), std::max(u, v), s);
}

CIDecision OracleTester::evaluate(Vertex u, Vertex v, const VertexSet& s) const {
    return {m_separated(truth_, {{u}, {v}, s}), std::nullopt, true};
}

QueryKey canonical_key(Vertex u, Vertex v, VertexSet s) {
    return {std::min(u, v), std::max(u, v), make_set(std::move(s))};
}

ScriptedTester::ScriptedTester(std::shared_ptr<const CITester> base, const std::vector<ScriptedAnswer>& overrides)
    : base_(std::move(base)) {
    if (!base_) throw ConfigError("scripted tester needs a base tester");
    for (const auto& o : overrides) {
        if (o.u == o.v) throw ConfigError("scripted answer needs two distinct variables");
        auto key = canonical_key(o.u, o.v, o.s);
        if (set_contains(std::get<2>(key), o.u) || set_contains(std::get<2>(key), o.v)) {
            throw ConfigError("scripted answer conditioning set contains an endpoint");
        }
        auto [it, inserted] = overrides_.emplace(std::move(key), o.independent);
        if (!inserted && it->second != o.independent) throw ConfigError("conflicting scripted answers for one query");
    }
}

ScriptedTester::ScriptedTester(MixedGraph truth, const std::vector<ScriptedAnswer>& overrides)
    : ScriptedTester(std::make_shared<OracleTester>(std::move(truth)), overrides) {}

CIDecision ScriptedTester::evaluate(Vertex u, Vertex v, const VertexSet& s) const {
    if (auto it = overrides_.find({u, v, s}); it != overrides_.end()) return {it->second, std::nullopt, true};
    return base_->test(u, v, s);
}

std::size_t CachingTester::cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

CIDecision CachingTester::evaluate(Vertex u, Vertex v, const VertexSet& s) const {
    QueryKey key{u, v, s};
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    // Evaluated outside the lock; two threads racing on one key compute the
    // same deterministic answer.
    const CIDecision d = base_->test(u, v, s);
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), d);
    return d;
}

SufficientStats SufficientStats::from_dataset(const Dataset& data) {
    SufficientStats stats;
    stats.labels = data.columns;
    stats.n = data.sample_count();
    const auto p = static_cast<Eigen::Index>(data.columns.size());
    if (stats.n < 1) throw DomainError("dataset has no rows");
    const Eigen::RowVectorXd mean = data.rows.colwise().mean();
    const Eigen::MatrixXd centered = data.rows.rowwise() - mean;
    const Eigen::MatrixXd cov = centered.transpose() * centered;
    stats.correlation = Eigen::MatrixXd::Identity(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = i + 1; j < p; ++j) {
            const double denom = std::sqrt(cov(i, i) * cov(j, j));
            const double r = denom > 0.0 ? std::clamp(cov(i, j) / denom, -1.0, 1.0) : 0.0;
            stats.correlation(i, j) = r;
            stats.correlation(j, i) = r;
        }
    }
    return stats;
}

void SufficientStats::validate() const {
    const auto p = correlation.rows();
    if (correlation.cols() != p) throw DomainError("correlation matrix is not square");
    if (static_cast<Eigen::Index>(labels.size()) != p) throw DomainError("label count does not match correlation matrix");
    if (n < 1) throw DomainError("sample size must be at least 1");
    for (Eigen::Index i = 0; i < p; ++i) {
        if (correlation(i, i) != 1.0) throw DomainError("correlation diagonal must be exactly 1");
        for (Eigen::Index j = i + 1; j < p; ++j)
            if (std::abs(correlation(i, j) - correlation(j, i)) > 1e-12) throw DomainError("correlation matrix not symmetric");
    }
}

std::optional<double> partial_correlation(const SufficientStats& stats, Vertex u, Vertex v, const VertexSet& s) {
    const auto p = static_cast<Vertex>(stats.correlation.rows());
    if (u == v) throw DomainError("partial correlation needs two distinct variables");
    if (u < 0 || v < 0 || u >= p || v >= p) throw DomainError("variable index out of range");
    if (s.empty()) return stats.correlation(u, v);

    std::vector<Vertex> idx{u, v};
    for (Vertex w : s) {
        if (w == u || w == v) throw DomainError("conditioning set contains an endpoint");
        if (w < 0 || w >= p) throw DomainError("variable index out of range");
        idx.push_back(w);
    }
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = stats.correlation(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);

    Eigen::MatrixXd precision;
    Eigen::LLT<Eigen::MatrixXd> llt(sub);
    if (llt.info() == Eigen::Success) {
        precision = llt.solve(Eigen::MatrixXd::Identity(k, k));
    } else {
        precision = sub.completeOrthogonalDecomposition().pseudoInverse();
    }
    const double denom = precision(0, 0) * precision(1, 1);
    if (!(denom > 0.0) || !std::isfinite(denom)) return std::nullopt;
    const double rho = -precision(0, 1) / std::sqrt(denom);
    if (!std::isfinite(rho)) return std::nullopt;
    return std::clamp(rho, -1.0, 1.0);
}

CIDecision fisher_z_test(const SufficientStats& stats, Vertex u, Vertex v, const VertexSet& s, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
    const double dof = static_cast<double>(stats.n) - static_cast<double>(s.size()) - 3.0;
    if (dof <= 0.0) return {false, std::nullopt, false};
    const auto rho = partial_correlation(stats, u, v, s);
    if (!rho) return {false, std::nullopt, false};
    const double r = std::clamp(*rho, -1.0 + kRhoClamp, 1.0 - kRhoClamp);
    const double z = 0.5 * std::log((1.0 + r) / (1.0 - r));
    const double statistic = std::sqrt(dof) * std::abs(z);
    const double cutoff = boost::math::quantile(boost::math::complement(boost::math::normal(), alpha / 2.0));
    return {statistic <= cutoff, statistic, true};
}

GaussianTester::GaussianTester(SufficientStats stats, double alpha) : stats_(std::move(stats)), alpha_(alpha) {
    stats_.validate();
    if (!(alpha_ > 0.0 && alpha_ < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
}

CIDecision GaussianTester::evaluate(Vertex u, Vertex v, const VertexSet& s) const {
    return fisher_z_test(stats_, u, v, s, alpha_);
}

}  // namespace mvrcg
