#pragma once

#include <vector>

#include "mvrcg/citest.hpp"
#include "mvrcg/criteria.hpp"
#include "mvrcg/skeleton.hpp"

namespace mvrcg {

enum class TripleClass { collider, noncollider, ambiguous };

struct TripleLabel {
    UnshieldedTriple triple;
    TripleClass label = TripleClass::ambiguous;
    int containing_mid = 0;  // separating sets that contain the middle vertex
    int separating_sets = 0;

    bool operator==(const TripleLabel&) const = default;
};

/// Majority-rule thresholds in percent, 0 <= lo <= hi <= 100. (0, 100) is
/// the conservative rule.
struct MajorityThresholds {
    double lo = 50.0;
    double hi = 50.0;

    static constexpr MajorityThresholds conservative() { return {0.0, 100.0}; }
    bool is_conservative() const { return lo == 0.0 && hi == 100.0; }
    void validate() const;
};

/// Labels one triple from the tally of separating sets containing its
/// middle vertex. No separating set, or a share f with lo <= 100 f <= hi,
/// gives ambiguous; below lo collider, above hi noncollider. Under the
/// conservative thresholds a middle vertex in none / all of the sets gives
/// collider / noncollider.
TripleClass label_from_tally(int containing_mid, int separating_sets, const MajorityThresholds& t);

/// For every unshielded triple of `skeleton`, tests every subset of the
/// adjacency sets of both endpoints and labels the triple by majority rule.
std::vector<TripleLabel> classify_triples(const MixedGraph& skeleton, const CITester& tester,
                                          const MajorityThresholds& thresholds);

/// Puts arrowheads at the middle vertex of every unshielded triple whose
/// recorded separating set excludes it.
MixedGraph vstructures_plain(const MixedGraph& skeleton, const SepsetMap& sepsets);

/// Puts arrowheads at the middle vertex of every triple labelled collider.
MixedGraph orient_colliders(const MixedGraph& skeleton, const std::vector<TripleLabel>& labels);

}  // namespace mvrcg
