#pragma once

#include <vector>

#include "mvrcg/graph.hpp"

namespace mvrcg {

/// Clique tree of a chordal undirected graph built by maximum cardinality
/// search. Cliques of different connected components hang off the root with
/// empty separators.
struct JunctionTree {
    std::vector<VertexSet> cliques;  // in creation order; cliques[0] is the root
    std::vector<int> parent;         // -1 for the root
    std::vector<int> depth;
};

/// Maximum cardinality search over the undirected edges of `g`; ties go to
/// the smallest vertex index, so the search starts at vertex 0.
std::vector<Vertex> maximum_cardinality_order(const MixedGraph& g);

/// Throws StructureError when the undirected part of `g` is not chordal.
JunctionTree junction_tree(const MixedGraph& g);

/// Vertex order induced by cliques sorted root-first (depth, then creation):
/// every vertex of an earlier clique precedes the new vertices of later ones.
std::vector<Vertex> clique_vertex_order(const MixedGraph& g, const JunctionTree& tree);

/// Turns every undirected edge into a directed one, earlier -> later in the
/// clique-tree vertex order. Directed and bidirected edges are untouched.
MixedGraph orient_remaining_undirected(const MixedGraph& essential);

}  // namespace mvrcg
