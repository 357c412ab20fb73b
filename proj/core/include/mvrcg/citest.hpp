#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include <Eigen/Core>

#include "mvrcg/dataset.hpp"
#include "mvrcg/graph.hpp"

namespace mvrcg {

struct CIDecision {
    bool independent = false;
    std::optional<double> statistic;  // absent for oracle and scripted answers
    bool reliable = true;             // false only when the sample is too small for the test

    bool operator==(const CIDecision&) const = default;
};

/// Source of conditional-independence judgements u _||_ v | S.
///
/// `test` canonicalizes the query (S sorted, u != v, neither in S) and counts
/// every call; implementations answer symmetrically in u and v. Safe to call
/// from several threads.
class CITester {
public:
    virtual ~CITester() = default;

    CIDecision test(Vertex u, Vertex v, VertexSet s) const;
    std::size_t call_count() const { return calls_.load(std::memory_order_relaxed); }
    void reset_count() { calls_.store(0, std::memory_order_relaxed); }

protected:
    virtual CIDecision evaluate(Vertex u, Vertex v, const VertexSet& s) const = 0;

private:
    mutable std::atomic<std::size_t> calls_{0};
};

/// Exact answers from m-separation in a known graph.
class OracleTester final : public CITester {
public:
    explicit OracleTester(MixedGraph truth) : truth_(std::move(truth)) {}
    const MixedGraph& graph() const { return truth_; }

protected:
    CIDecision evaluate(Vertex u, Vertex v, const VertexSet& s) const override;

private:
    MixedGraph truth_;
};

/// Canonical query key: (min(u,v), max(u,v), sorted S).
using QueryKey = std::tuple<Vertex, Vertex, VertexSet>;
QueryKey canonical_key(Vertex u, Vertex v, VertexSet s);

struct ScriptedAnswer {
    Vertex u = 0;
    Vertex v = 0;
    VertexSet s;
    bool independent = false;
};

/// Returns the scripted answer for an exactly matching query, otherwise
/// delegates. Conflicting duplicate entries are a ConfigError.
class ScriptedTester final : public CITester {
public:
    ScriptedTester(std::shared_ptr<const CITester> base, const std::vector<ScriptedAnswer>& overrides);
    ScriptedTester(MixedGraph truth, const std::vector<ScriptedAnswer>& overrides);

protected:
    CIDecision evaluate(Vertex u, Vertex v, const VertexSet& s) const override;

private:
    std::shared_ptr<const CITester> base_;
    std::map<QueryKey, bool> overrides_;
};

/// Memoizes another tester. Decisions are unchanged; only the wrapped
/// tester's call count drops.
class CachingTester final : public CITester {
public:
    explicit CachingTester(std::shared_ptr<const CITester> base) : base_(std::move(base)) {}
    const CITester& base() const { return *base_; }
    std::size_t cache_size() const;

protected:
    CIDecision evaluate(Vertex u, Vertex v, const VertexSet& s) const override;

private:
    std::shared_ptr<const CITester> base_;
    mutable std::mutex mutex_;
    mutable std::map<QueryKey, CIDecision> cache_;
};

/// Sample correlation matrix plus sample size; everything the Gaussian test needs.
struct SufficientStats {
    Eigen::MatrixXd correlation;
    long n = 0;
    std::vector<std::string> labels;

    static SufficientStats from_dataset(const Dataset& data);
    /// Throws DomainError unless square, symmetric within 1e-12, unit
    /// diagonal, n >= 1 and labels match the dimension.
    void validate() const;
};

/// Partial correlation of u and v given S from the inverse of the
/// correlation submatrix over {u, v} u S. Falls back to a pseudo-inverse for
/// singular submatrices; nullopt when even that is degenerate.
std::optional<double> partial_correlation(const SufficientStats& stats, Vertex u, Vertex v, const VertexSet& s);

/// Fisher z test of zero partial correlation:
/// statistic = sqrt(n - |S| - 3) * |atanh(rho)|, independent iff
/// statistic <= Phi^-1(1 - alpha/2). Too few samples gives an unreliable
/// "dependent" answer.
CIDecision fisher_z_test(const SufficientStats& stats, Vertex u, Vertex v, const VertexSet& s, double alpha);

class GaussianTester final : public CITester {
public:
    GaussianTester(SufficientStats stats, double alpha);
    const SufficientStats& stats() const { return stats_; }
    double alpha() const { return alpha_; }

protected:
    CIDecision evaluate(Vertex u, Vertex v, const VertexSet& s) const override;

private:
    SufficientStats stats_;
    double alpha_;
};

}  // namespace mvrcg
