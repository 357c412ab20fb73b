#pragma once

#include <vector>

#include "mvrcg/graph.hpp"

namespace mvrcg {

/// Vertices joined to v by an edge of any kind.
VertexSet adjacency_set(const MixedGraph& g, Vertex v);

struct Relations {
    VertexSet parents;    // tails of directed edges into A, outside A
    VertexSet neighbors;  // bidirected-adjacent to A, outside A
    VertexSet boundary;   // parents union neighbors
};

Relations relations(const MixedGraph& g, const VertexSet& a);

/// an(X): vertices with a directed path into some member of X. Bidirected and
/// undirected edges do not count. May contain members of X that are
/// ancestors of other members.
VertexSet ancestors(const MixedGraph& g, const VertexSet& x);
/// An(X) = an(X) union X.
VertexSet ancestral_closure(const MixedGraph& g, const VertexSet& x);

/// True iff some cycle of >= 3 distinct vertices uses only forward -> and
/// <-> edges and at least one ->.
bool has_partially_directed_cycle(const MixedGraph& g);

/// Connected components over bidirected and undirected edges, each sorted,
/// ordered by smallest member. Throws StructureError on a partially directed
/// cycle.
std::vector<VertexSet> chain_components(const MixedGraph& g);

/// Vertices joined to x by a collider chain (every non-endpoint a collider),
/// staying inside `allowed` (a p-length mask; empty = everything allowed).
VertexSet collider_connected(const MixedGraph& g, Vertex x, const std::vector<char>& allowed = {});

/// (G)^a: undirected graph with u -- v iff u and v are collider connected.
MixedGraph augmented_graph(const MixedGraph& g);

struct SeparationQuery {
    VertexSet x;
    VertexSet y;
    VertexSet z;

    /// Throws DomainError unless X, Y nonempty and X, Y, Z pairwise disjoint.
    void validate(const MixedGraph& g) const;
};

/// m-separation decided through the augmented graph of the ancestral
/// subgraph An(X u Y u Z): X and Y are separated iff every path between them
/// in that undirected graph meets Z.
bool m_separated(const MixedGraph& g, const SeparationQuery& q);

/// Exhaustive search over chains between u and v for one that is
/// m-connecting given z. Exponential; intended as a cross-check on small
/// graphs only.
bool m_connecting_chain_exists(const MixedGraph& g, Vertex u, Vertex v, const VertexSet& z);

/// (a, mid, c) with a < c, a and c nonadjacent, mid adjacent to both.
struct UnshieldedTriple {
    Vertex a = 0;
    Vertex mid = 0;
    Vertex c = 0;

    auto operator<=>(const UnshieldedTriple&) const = default;
};

/// All unshielded triples, ordered by (mid, a, c).
std::vector<UnshieldedTriple> unshielded_triples(const MixedGraph& g);
bool is_collider(const MixedGraph& g, const UnshieldedTriple& t);
std::vector<UnshieldedTriple> unshielded_colliders(const MixedGraph& g);

/// Same adjacencies and same unshielded colliders. Throws DomainError when
/// the vertex lists differ.
bool markov_equivalent(const MixedGraph& g, const MixedGraph& h);

}  // namespace mvrcg
