#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mvrcg/errors.hpp"

namespace mvrcg {

/// Dense vertex index, 0..p-1, in declaration order.
using Vertex = int;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Endpoint mark of an edge at one of its two vertices. `none` means the
/// two vertices are not adjacent.
enum class Mark : std::uint8_t { none, tail, arrow };

enum class EdgeKind : std::uint8_t { undirected, directed, bidirected };

/// One edge in canonical form: u < v, with the mark at each end.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Mark at_u = Mark::tail;
    Mark at_v = Mark::tail;

    EdgeKind kind() const;
    bool operator==(const Edge&) const = default;
};

/// Graph over labelled vertices with undirected (--), directed (->) and
/// bidirected (<->) edges. At most one edge per vertex pair, no self-loops.
///
/// Marks are kept in a dense p x p table: `mark(at, other)` is the mark at
/// `at` on the edge joining `at` and `other`. The table is kept consistent so
/// both orientations of a query agree.
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(std::vector<std::string> labels);

    /// Vertices labelled "X1".."Xp".
    static MixedGraph with_size(int p);
    static MixedGraph complete_undirected(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const;
    Vertex index_of(std::string_view label) const;
    bool contains(Vertex v) const { return v >= 0 && v < size(); }
    void check_vertex(Vertex v) const;

    Mark mark(Vertex at, Vertex other) const;
    bool adjacent(Vertex u, Vertex v) const { return mark(u, v) != Mark::none; }
    bool has_arrowhead(Vertex at, Vertex other) const { return mark(at, other) == Mark::arrow; }
    bool is_undirected(Vertex u, Vertex v) const;
    bool is_directed(Vertex from, Vertex to) const;
    bool is_bidirected(Vertex u, Vertex v) const;

    void set_edge(Vertex u, Vertex v, Mark at_u, Mark at_v);
    void add_undirected(Vertex u, Vertex v) { set_edge(u, v, Mark::tail, Mark::tail); }
    void add_directed(Vertex from, Vertex to) { set_edge(from, to, Mark::tail, Mark::arrow); }
    void add_bidirected(Vertex u, Vertex v) { set_edge(u, v, Mark::arrow, Mark::arrow); }
    void remove_edge(Vertex u, Vertex v);
    /// Puts an arrowhead at `at` on the existing edge at--other. An edge that
    /// already carries an arrowhead at `other` becomes bidirected.
    void add_arrowhead(Vertex at, Vertex other);

    /// All vertices joined to v by an edge of any kind, ascending.
    VertexSet adjacent_to(Vertex v) const;
    /// Edges in canonical (u < v, lexicographic) order.
    std::vector<Edge> edges() const;
    int edge_count() const;
    bool has_undirected_edges() const;

    /// Same adjacencies, every edge undirected.
    MixedGraph skeleton() const;

    bool operator==(const MixedGraph& other) const;

private:
    std::size_t slot(Vertex at, Vertex other) const {
        return static_cast<std::size_t>(at) * labels_.size() + static_cast<std::size_t>(other);
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<Mark> marks_;
};

/// Sorted union / difference / membership helpers for VertexSet.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet make_set(std::vector<Vertex> vertices);

}  // namespace mvrcg
