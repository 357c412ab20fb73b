#include "mvrcg/triples.hpp"

#include <set>

namespace mvrcg {

void MajorityThresholds::validate() const {
    if (!(lo >= 0.0 && lo <= hi && hi <= 100.0)) throw ConfigError("majority thresholds need 0 <= lo <= hi <= 100");
}

TripleClass label_from_tally(int containing_mid, int separating_sets, const MajorityThresholds& t) {
    if (separating_sets == 0) return TripleClass::ambiguous;
    if (t.is_conservative()) {
        if (containing_mid == 0) return TripleClass::collider;
        if (containing_mid == separating_sets) return TripleClass::noncollider;
        return TripleClass::ambiguous;
    }
    const double percent = 100.0 * containing_mid / separating_sets;
    if (percent < t.lo) return TripleClass::collider;
    if (percent > t.hi) return TripleClass::noncollider;
    return TripleClass::ambiguous;
}

std::vector<TripleLabel> classify_triples(const MixedGraph& skeleton, const CITester& tester,
                                          const MajorityThresholds& thresholds) {
    thresholds.validate();
    std::vector<TripleLabel> out;
    for (const auto& t : unshielded_triples(skeleton)) {
        std::set<VertexSet> separating;
        for (Vertex end : {t.a, t.c}) {
            const auto adj = skeleton.adjacent_to(end);
            for (std::size_t k = 0; k <= adj.size(); ++k) {
                for_each_subset(adj, k, [&](const VertexSet& s) {
                    if (!separating.contains(s) && tester.test(t.a, t.c, s).independent) separating.insert(s);
                    return false;
                });
            }
        }
        TripleLabel label{t, TripleClass::ambiguous, 0, static_cast<int>(separating.size())};
        for (const auto& s : separating)
            if (set_contains(s, t.mid)) ++label.containing_mid;
        label.label = label_from_tally(label.containing_mid, label.separating_sets, thresholds);
        out.push_back(label);
    }
    return out;
}

MixedGraph vstructures_plain(const MixedGraph& skeleton, const SepsetMap& sepsets) {
    MixedGraph g = skeleton;
    for (const auto& t : unshielded_triples(skeleton)) {
        const VertexSet* s = sepsets.find(t.a, t.c);
        if (s == nullptr || set_contains(*s, t.mid)) continue;
        g.add_arrowhead(t.mid, t.a);
        g.add_arrowhead(t.mid, t.c);
    }
    return g;
}

MixedGraph orient_colliders(const MixedGraph& skeleton, const std::vector<TripleLabel>& labels) {
    MixedGraph g = skeleton;
    for (const auto& l : labels) {
        if (l.label != TripleClass::collider) continue;
        g.add_arrowhead(l.triple.mid, l.triple.a);
        g.add_arrowhead(l.triple.mid, l.triple.c);
    }
    return g;
}

}  // namespace mvrcg
