#include "mvrcg/skeleton.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

namespace mvrcg {

Ordering identity_ordering(int p) {
    Ordering o(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) o[static_cast<std::size_t>(i)] = i;
    return o;
}

void validate_ordering(const Ordering& ordering, int p) {
    if (static_cast<int>(ordering.size()) != p) {
        throw ConfigError("ordering has " + std::to_string(ordering.size()) + " entries, expected " + std::to_string(p));
    }
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    for (Vertex v : ordering) {
        if (v < 0 || v >= p || seen[static_cast<std::size_t>(v)]) throw ConfigError("ordering is not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::vector<int> ordering_ranks(const Ordering& ordering) {
    std::vector<int> rank(ordering.size());
    for (std::size_t k = 0; k < ordering.size(); ++k) rank[static_cast<std::size_t>(ordering[k])] = static_cast<int>(k);
    return rank;
}

void SepsetMap::set(Vertex u, Vertex v, VertexSet s) {
    if (u == v) throw DomainError("sepset needs two distinct vertices");
    s = make_set(std::move(s));
    if (set_contains(s, u) || set_contains(s, v)) throw DomainError("sepset contains an endpoint");
    entries_[{std::min(u, v), std::max(u, v)}] = std::move(s);
}

const VertexSet* SepsetMap::find(Vertex u, Vertex v) const {
    auto it = entries_.find({std::min(u, v), std::max(u, v)});
    return it == entries_.end() ? nullptr : &it->second;
}

namespace {

class AdjacencySearch {
public:
    AdjacencySearch(const CITester& tester, const std::vector<std::string>& labels, const Ordering& ordering,
                    const SkeletonOptions& options)
        : tester_(tester), options_(options), p_(static_cast<int>(labels.size())), ordering_(ordering),
          adjacent_(static_cast<std::size_t>(p_) * static_cast<std::size_t>(p_), 1) {
        validate_ordering(ordering, p_);
        for (int v = 0; v < p_; ++v) adjacent_[index(v, v)] = 0;
        result_.graph = MixedGraph(labels);
    }

    SkeletonResult run(bool stable) {
        const std::size_t calls_before = tester_.call_count();
        for (int level = 0; level <= p_ - 2; ++level) {
            const bool any = stable ? stable_level(level) : original_level(level);
            if (!any) {
                // nothing was tested at this level
                result_.removals_per_level.resize(static_cast<std::size_t>(level));
                break;
            }
        }
        for (Vertex u = 0; u < p_; ++u)
            for (Vertex v = u + 1; v < p_; ++v)
                if (adjacent_[index(u, v)]) result_.graph.add_undirected(u, v);
        result_.tests = tester_.call_count() - calls_before;
        return std::move(result_);
    }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(v);
    }

    /// Current neighbours of u in ordering-rank order.
    std::vector<Vertex> neighbours(Vertex u) const {
        std::vector<Vertex> out;
        for (Vertex w : ordering_)
            if (adjacent_[index(u, w)]) out.push_back(w);
        return out;
    }

    std::optional<VertexSet> find_sepset(Vertex u, Vertex v, const std::vector<Vertex>& candidates, int level) const {
        std::optional<VertexSet> found;
        for_each_subset(candidates, static_cast<std::size_t>(level), [&](const VertexSet& s) {
            if (!tester_.test(u, v, s).independent) return false;
            found = make_set(s);
            return true;
        });
        return found;
    }

    void remove(Vertex u, Vertex v, VertexSet s, int level) {
        adjacent_[index(u, v)] = 0;
        adjacent_[index(v, u)] = 0;
        result_.sepsets.set(u, v, std::move(s));
        if (static_cast<int>(result_.removals_per_level.size()) <= level) {
            result_.removals_per_level.resize(static_cast<std::size_t>(level) + 1, 0);
        }
        ++result_.removals_per_level[static_cast<std::size_t>(level)];
    }

    void note_level(int level) {
        if (static_cast<int>(result_.removals_per_level.size()) <= level) {
            result_.removals_per_level.resize(static_cast<std::size_t>(level) + 1, 0);
        }
    }

    void trace(int level, Vertex u, Vertex v, const std::vector<Vertex>& adjacency, bool eligible, bool removed,
               const VertexSet& sepset) {
        if (!options_.record_trace) return;
        result_.trace.push_back({level, u, v, make_set(adjacency), eligible, removed, sepset});
    }

    bool original_level(int level) {
        note_level(level);
        bool any_eligible = false;
        for (Vertex u : ordering_) {
            for (Vertex v : ordering_) {
                if (!adjacent_[index(u, v)]) continue;
                const auto adj = neighbours(u);
                std::vector<Vertex> candidates;
                for (Vertex w : adj)
                    if (w != v) candidates.push_back(w);
                const bool eligible = static_cast<int>(candidates.size()) >= level;
                if (!eligible) {
                    trace(level, u, v, adj, false, false, {});
                    continue;
                }
                any_eligible = true;
                if (auto s = find_sepset(u, v, candidates, level)) {
                    trace(level, u, v, adj, true, true, *s);
                    remove(u, v, *s, level);
                } else {
                    trace(level, u, v, adj, true, false, {});
                }
            }
        }
        return any_eligible;
    }

    struct PairTask {
        Vertex u;
        Vertex v;
        std::vector<Vertex> candidates;
        std::optional<VertexSet> sepset;
    };

    bool stable_level(int level) {
        note_level(level);
        std::vector<std::vector<Vertex>> frozen(static_cast<std::size_t>(p_));
        for (Vertex v = 0; v < p_; ++v) frozen[static_cast<std::size_t>(v)] = neighbours(v);

        std::vector<PairTask> tasks;
        for (Vertex u : ordering_) {
            const auto& adj = frozen[static_cast<std::size_t>(u)];
            for (Vertex v : adj) {
                std::vector<Vertex> candidates;
                for (Vertex w : adj)
                    if (w != v) candidates.push_back(w);
                tasks.push_back({u, v, std::move(candidates), std::nullopt});
            }
        }
        bool any_eligible = false;
        for (const auto& t : tasks)
            if (static_cast<int>(t.candidates.size()) >= level) any_eligible = true;

        if (options_.workers > 1) {
            // Every eligible pair is tested against the frozen sets; removals
            // are then committed in ordering sequence, which yields the same
            // graph and sepsets as the sequential pass.
            std::atomic<std::size_t> next{0};
            auto work = [&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    auto& t = tasks[i];
                    if (static_cast<int>(t.candidates.size()) >= level) t.sepset = find_sepset(t.u, t.v, t.candidates, level);
                }
            };
            std::vector<std::jthread> pool;
            for (int w = 0; w < options_.workers; ++w) pool.emplace_back(work);
        }

        for (auto& t : tasks) {
            if (!adjacent_[index(t.u, t.v)]) continue;  // removed earlier in this level via (v, u)
            const auto& adj = frozen[static_cast<std::size_t>(t.u)];
            const bool eligible = static_cast<int>(t.candidates.size()) >= level;
            if (!eligible) {
                trace(level, t.u, t.v, adj, false, false, {});
                continue;
            }
            if (options_.workers <= 1) t.sepset = find_sepset(t.u, t.v, t.candidates, level);
            if (t.sepset) {
                trace(level, t.u, t.v, adj, true, true, *t.sepset);
                remove(t.u, t.v, *t.sepset, level);
            } else {
                trace(level, t.u, t.v, adj, true, false, {});
            }
        }
        return any_eligible;
    }

    const CITester& tester_;
    SkeletonOptions options_;
    int p_;
    Ordering ordering_;
    std::vector<char> adjacent_;
    SkeletonResult result_;
};

}  // namespace

SkeletonResult skeleton_original(const CITester& tester, const std::vector<std::string>& labels, const Ordering& ordering,
                                 const SkeletonOptions& options) {
    return AdjacencySearch(tester, labels, ordering, options).run(false);
}

SkeletonResult skeleton_stable(const CITester& tester, const std::vector<std::string>& labels, const Ordering& ordering,
                               const SkeletonOptions& options) {
    return AdjacencySearch(tester, labels, ordering, options).run(true);
}

}  // namespace mvrcg
