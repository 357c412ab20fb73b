#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mvrcg/citest.hpp"
#include "mvrcg/graph.hpp"

namespace mvrcg {

/// A permutation of 0..p-1; position k holds the k-th vertex to consider.
using Ordering = std::vector<Vertex>;

Ordering identity_ordering(int p);
/// Throws ConfigError unless `ordering` is a permutation of 0..p-1.
void validate_ordering(const Ordering& ordering, int p);
/// rank[v] = position of v in `ordering`.
std::vector<int> ordering_ranks(const Ordering& ordering);

/// Separating sets recorded during skeleton recovery, one entry per removed
/// edge, keyed on the unordered pair.
class SepsetMap {
public:
    void set(Vertex u, Vertex v, VertexSet s);
    const VertexSet* find(Vertex u, Vertex v) const;
    bool contains(Vertex u, Vertex v) const { return find(u, v) != nullptr; }
    std::size_t size() const { return entries_.size(); }
    const std::map<std::pair<Vertex, Vertex>, VertexSet>& entries() const { return entries_; }

    bool operator==(const SepsetMap&) const = default;

private:
    std::map<std::pair<Vertex, Vertex>, VertexSet> entries_;
};

/// One ordered pair (u, v) visited while u and v were still adjacent.
struct SkeletonTraceEntry {
    int level = 0;
    Vertex u = 0;
    Vertex v = 0;
    VertexSet adjacency;  // adjacency set of u used for this pair
    bool eligible = false;  // |adjacency \ {v}| >= level
    bool removed = false;
    VertexSet sepset;  // set that removed the edge, when removed
};

struct SkeletonOptions {
    bool record_trace = false;
    /// Threads used for the CI tests of one level of the stable search.
    int workers = 1;
};

struct SkeletonResult {
    MixedGraph graph;  // undirected
    SepsetMap sepsets;
    std::vector<SkeletonTraceEntry> trace;
    std::vector<int> removals_per_level;
    std::size_t tests = 0;
};

/// Adjacency search starting from the complete graph. Adjacency sets are
/// updated immediately after every removal, so the result can depend on
/// `ordering`. Ordered pairs are scanned by (rank u, rank v); conditioning
/// sets of each size in lexicographic rank order.
SkeletonResult skeleton_original(const CITester& tester, const std::vector<std::string>& labels, const Ordering& ordering,
                                 const SkeletonOptions& options = {});

/// Same search with adjacency sets frozen at the start of each level;
/// removals affect adjacency only from the next level on. The resulting
/// edge set does not depend on `ordering`.
SkeletonResult skeleton_stable(const CITester& tester, const std::vector<std::string>& labels, const Ordering& ordering,
                               const SkeletonOptions& options = {});

/// Calls `visit` with each size-k subset of `items` in lexicographic order
/// of positions; stops early when `visit` returns true. Returns whether it
/// stopped early.
template <typename Visit>
bool for_each_subset(const std::vector<Vertex>& items, std::size_t k, Visit&& visit) {
    if (k > items.size()) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    VertexSet subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
        if (visit(subset)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == items.size() - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace mvrcg
