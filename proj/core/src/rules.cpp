#include "mvrcg/rules.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <tuple>

namespace mvrcg {

NoncolliderJudge judge_from_sepsets(SepsetMap sepsets) {
    auto shared = std::make_shared<const SepsetMap>(std::move(sepsets));
    return [shared](Vertex a, Vertex mid, Vertex c) {
        const VertexSet* s = shared->find(a, c);
        return s != nullptr && set_contains(*s, mid);
    };
}

NoncolliderJudge judge_from_labels(const std::vector<TripleLabel>& labels) {
    auto noncolliders = std::make_shared<std::set<std::tuple<Vertex, Vertex, Vertex>>>();
    for (const auto& l : labels)
        if (l.label == TripleClass::noncollider)
            noncolliders->emplace(std::min(l.triple.a, l.triple.c), l.triple.mid, std::max(l.triple.a, l.triple.c));
    return [noncolliders](Vertex a, Vertex mid, Vertex c) {
        return noncolliders->contains({std::min(a, c), mid, std::max(a, c)});
    };
}

NoncolliderJudge judge_from_graph(MixedGraph truth) {
    auto shared = std::make_shared<const MixedGraph>(std::move(truth));
    return [shared](Vertex a, Vertex mid, Vertex c) {
        return !(shared->has_arrowhead(mid, a) && shared->has_arrowhead(mid, c));
    };
}

namespace {

/// Adjacency lists in ordering-rank order. Rules only change marks, never
/// adjacencies, so these stay valid for a whole run.
struct OrderedAdjacency {
    const Ordering& order;
    std::vector<std::vector<Vertex>> adj;

    OrderedAdjacency(const MixedGraph& g, const Ordering& o) : order(o), adj(static_cast<std::size_t>(g.size())) {
        for (Vertex u : order)
            for (Vertex v : order)
                if (u != v && g.adjacent(u, v)) adj[static_cast<std::size_t>(u)].push_back(v);
    }
    const std::vector<Vertex>& of(Vertex v) const { return adj[static_cast<std::size_t>(v)]; }
};

// Each matcher walks the graph in ordering sequence and reports candidate
// firings to `emit`, re-reading marks at every step so that firings applied
// by the caller in the meantime are seen.

template <typename Emit>
void match_r1(const MixedGraph& g, const OrderedAdjacency& nb, const NoncolliderJudge& judge, Emit&& emit) {
    for (Vertex b : nb.order)
        for (Vertex a : nb.of(b)) {
            if (!g.has_arrowhead(b, a)) continue;
            for (Vertex c : nb.of(b)) {
                if (c == a || !g.is_undirected(b, c) || g.adjacent(a, c)) continue;
                if (judge(a, b, c)) emit(RuleFiring{1, b, c});
            }
        }
}

/// A path from -> ... -> to of length two or more whose every edge carries an
/// arrowhead at its far end; the edge from--to itself is not used.
bool forward_path(const MixedGraph& g, const OrderedAdjacency& nb, Vertex from, Vertex to) {
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<Vertex> stack{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : nb.of(v)) {
            if (seen[static_cast<std::size_t>(w)] || !g.has_arrowhead(w, v)) continue;
            if (w == to) {
                if (v == from) continue;
                return true;
            }
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    return false;
}

template <typename Emit>
void match_r2(const MixedGraph& g, const OrderedAdjacency& nb, Emit&& emit) {
    for (Vertex a : nb.order)
        for (Vertex c : nb.of(a)) {
            if (g.mark(c, a) != Mark::tail) continue;
            if (forward_path(g, nb, a, c)) emit(RuleFiring{2, a, c});
        }
}

template <typename Emit>
void match_r3(const MixedGraph& g, const OrderedAdjacency& nb, const NoncolliderJudge& judge, Emit&& emit) {
    for (Vertex d : nb.order)
        for (Vertex b : nb.of(d)) {
            if (g.mark(b, d) != Mark::tail) continue;
            bool fired = false;
            for (Vertex a : nb.of(b)) {
                if (fired) break;
                if (a == d || !g.adjacent(a, d) || !g.has_arrowhead(b, a)) continue;
                for (Vertex c : nb.of(b)) {
                    if (c == a || c == d || g.adjacent(a, c) || !g.adjacent(c, d) || !g.has_arrowhead(b, c)) continue;
                    if (judge(a, d, c)) {
                        emit(RuleFiring{3, d, b});
                        fired = true;
                        break;
                    }
                }
            }
        }
}

}  // namespace

MixedGraph apply_rules_sequential(MixedGraph g, const NoncolliderJudge& judge, const Ordering& ordering,
                                  std::vector<RuleFiring>* log) {
    validate_ordering(ordering, g.size());
    auto fire = [&](const RuleFiring& f) {
        // A firing found earlier in the same scan may already have touched this edge.
        if (g.mark(f.at, f.from) != Mark::tail) return;
        g.add_arrowhead(f.at, f.from);
        if (log) log->push_back(f);
    };
    const OrderedAdjacency nb(g, ordering);
    while (true) {
        const auto before = g;
        match_r1(g, nb, judge, fire);
        match_r2(g, nb, fire);
        match_r3(g, nb, judge, fire);
        if (g == before) return g;
    }
}

MixedGraph apply_rules_lists(MixedGraph g, const NoncolliderJudge& judge, std::vector<RuleFiring>* log) {
    const Ordering order = identity_ordering(g.size());
    const OrderedAdjacency nb(g, order);
    auto apply_all = [&](const std::vector<RuleFiring>& firings) {
        for (const auto& f : firings) {
            g.add_arrowhead(f.at, f.from);
            if (log) log->push_back(f);
        }
    };
    while (true) {
        const auto before = g;
        std::vector<RuleFiring> batch;
        auto collect = [&](const RuleFiring& f) { batch.push_back(f); };

        match_r1(g, nb, judge, collect);
        apply_all(batch);
        batch.clear();
        match_r2(g, nb, collect);
        apply_all(batch);
        batch.clear();
        match_r3(g, nb, judge, collect);
        apply_all(batch);
        if (g == before) return g;
    }
}

}  // namespace mvrcg
