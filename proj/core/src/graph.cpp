#include "mvrcg/graph.hpp"

#include <algorithm>
#include <iterator>

namespace mvrcg {

EdgeKind Edge::kind() const {
    if (at_u == Mark::arrow && at_v == Mark::arrow) return EdgeKind::bidirected;
    if (at_u == Mark::tail && at_v == Mark::tail) return EdgeKind::undirected;
    return EdgeKind::directed;
}

MixedGraph::MixedGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw DomainError("empty vertex label");
        if (!index_.emplace(labels_[i], static_cast<Vertex>(i)).second) {
            throw DomainError("duplicate vertex label '" + labels_[i] + "'");
        }
    }
    marks_.assign(labels_.size() * labels_.size(), Mark::none);
}

MixedGraph MixedGraph::with_size(int p) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) labels.push_back("X" + std::to_string(i));
    return MixedGraph(std::move(labels));
}

MixedGraph MixedGraph::complete_undirected(std::vector<std::string> labels) {
    MixedGraph g(std::move(labels));
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v) g.add_undirected(u, v);
    return g;
}

const std::string& MixedGraph::label(Vertex v) const {
    check_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
}

Vertex MixedGraph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) throw DomainError("unknown vertex '" + std::string(label) + "'");
    return it->second;
}

void MixedGraph::check_vertex(Vertex v) const {
    if (!contains(v)) throw DomainError("vertex index " + std::to_string(v) + " out of range");
}

Mark MixedGraph::mark(Vertex at, Vertex other) const {
    check_vertex(at);
    check_vertex(other);
    return marks_[slot(at, other)];
}

bool MixedGraph::is_undirected(Vertex u, Vertex v) const {
    return mark(u, v) == Mark::tail && mark(v, u) == Mark::tail;
}

bool MixedGraph::is_directed(Vertex from, Vertex to) const {
    return mark(from, to) == Mark::tail && mark(to, from) == Mark::arrow;
}

bool MixedGraph::is_bidirected(Vertex u, Vertex v) const {
    return mark(u, v) == Mark::arrow && mark(v, u) == Mark::arrow;
}

void MixedGraph::set_edge(Vertex u, Vertex v, Mark at_u, Mark at_v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop on '" + labels_[static_cast<std::size_t>(u)] + "'");
    if (at_u == Mark::none || at_v == Mark::none) throw DomainError("edge endpoint mark must be tail or arrow");
    marks_[slot(u, v)] = at_u;
    marks_[slot(v, u)] = at_v;
}

void MixedGraph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    marks_[slot(u, v)] = Mark::none;
    marks_[slot(v, u)] = Mark::none;
}

void MixedGraph::add_arrowhead(Vertex at, Vertex other) {
    if (!adjacent(at, other)) {
        throw DomainError("no edge between '" + label(at) + "' and '" + label(other) + "'");
    }
    marks_[slot(at, other)] = Mark::arrow;
}

VertexSet MixedGraph::adjacent_to(Vertex v) const {
    check_vertex(v);
    VertexSet out;
    for (Vertex w = 0; w < size(); ++w)
        if (marks_[slot(v, w)] != Mark::none) out.push_back(w);
    return out;
}

std::vector<Edge> MixedGraph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v = u + 1; v < size(); ++v)
            if (marks_[slot(u, v)] != Mark::none) out.push_back({u, v, marks_[slot(u, v)], marks_[slot(v, u)]});
    return out;
}

int MixedGraph::edge_count() const {
    int count = 0;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v = u + 1; v < size(); ++v)
            if (marks_[slot(u, v)] != Mark::none) ++count;
    return count;
}

bool MixedGraph::has_undirected_edges() const {
    for (const Edge& e : edges())
        if (e.kind() == EdgeKind::undirected) return true;
    return false;
}

MixedGraph MixedGraph::skeleton() const {
    MixedGraph out(labels_);
    for (const Edge& e : edges()) out.add_undirected(e.u, e.v);
    return out;
}

bool MixedGraph::operator==(const MixedGraph& other) const {
    return labels_ == other.labels_ && marks_ == other.marks_;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet make_set(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

}  // namespace mvrcg
