#pragma once

#include <functional>
#include <vector>

#include "mvrcg/graph.hpp"
#include "mvrcg/skeleton.hpp"
#include "mvrcg/triples.hpp"

namespace mvrcg {

/// True when the unshielded triple (a, mid, c) is known not to be a collider.
using NoncolliderJudge = std::function<bool(Vertex a, Vertex mid, Vertex c)>;

/// mid is in the separating set recorded for (a, c).
NoncolliderJudge judge_from_sepsets(SepsetMap sepsets);
/// The triple carries a noncollider label; ambiguous triples never qualify.
NoncolliderJudge judge_from_labels(const std::vector<TripleLabel>& labels);
/// The triple is not a collider in `truth`.
NoncolliderJudge judge_from_graph(MixedGraph truth);

// Orientation rules. Each one puts a single arrowhead where an edge has a tail:
//
//   R1  a *-> b -- c, a and c nonadjacent, (a, b, c) a noncollider   =>  b -> c
//   R2  a *-> ... *-> c (two or more edges) and a tail at c on a, c   =>  arrowhead at c
//   R3  a *-> b <-* c, a and c nonadjacent, d adjacent to a, b and c,
//       (a, d, c) a noncollider, a tail at b on d, b                 =>  arrowhead at b
//
// "*->" means an arrowhead at the right-hand vertex, whatever the mark at
// the left one. In R1 b is a noncollider, so its end of b -- c is a tail; in
// R2 and R3 the missing arrowhead would close a partially directed cycle.
// R2 and R3 also fire on directed edges, turning a -> c into a bidirected
// edge: a triangle a <-> b, b <-> c, a -- c forces a <-> c even when one
// end of a -- c already got its arrowhead elsewhere.

enum class RuleMode { sequential, list };

/// Where an orientation rule places an arrowhead: at `at` on edge from--at.
struct RuleFiring {
    int rule = 1;
    Vertex from = 0;
    Vertex at = 0;

    bool operator==(const RuleFiring&) const = default;
};

/// Applies R1, R2, R3 in turn, each firing immediately as it is found while
/// scanning vertices in `ordering`, until nothing changes. The result can
/// depend on `ordering`.
MixedGraph apply_rules_sequential(MixedGraph g, const NoncolliderJudge& judge, const Ordering& ordering,
                                  std::vector<RuleFiring>* log = nullptr);

/// Per round: collects every R1 match on the current graph and applies them
/// all, then the same for R2 and R3; repeats until nothing changes. Two
/// matches that put arrowheads at both ends of one edge yield a bidirected
/// edge. Independent of any vertex ordering.
MixedGraph apply_rules_lists(MixedGraph g, const NoncolliderJudge& judge, std::vector<RuleFiring>* log = nullptr);

}  // namespace mvrcg
