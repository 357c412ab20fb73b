#include "mvrcg/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace mvrcg {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool valid_label(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == ',' || c == ' ' || c == '\t' || c == '#' || c == '\n' || c == '\r') return false;
    return true;
}

struct RawEdge {
    std::string a;
    std::string b;
    std::string op;
    int line;
};

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("edge list line " + std::to_string(line) + ": " + what);
}

}  // namespace

MixedGraph parse_edge_list(std::string_view text) {
    std::optional<std::vector<std::string>> header;
    std::vector<std::string> seen;
    std::vector<RawEdge> raw;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        auto raw_line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++line_no;
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        raw_line = raw_line.substr(0, raw_line.find('#'));  // labels never contain '#'
        const auto line = trim(raw_line);
        if (line.empty()) continue;

        if (line.starts_with("vertices:")) {
            if (header) fail(line_no, "duplicate vertices header");
            if (!raw.empty()) fail(line_no, "vertices header must precede edges");
            header.emplace();
            auto rest = trim(line.substr(9));
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const auto name = trim(rest.substr(0, comma));
                if (!valid_label(name)) fail(line_no, "bad vertex label '" + std::string(name) + "'");
                header->emplace_back(name);
                if (comma == std::string_view::npos) break;
                rest = rest.substr(comma + 1);
                if (trim(rest).empty()) fail(line_no, "trailing comma in vertices header");
            }
            continue;
        }

        std::istringstream in{std::string(line)};
        RawEdge e{{}, {}, {}, line_no};
        std::string extra;
        if (!(in >> e.a >> e.op >> e.b) || (in >> extra)) fail(line_no, "expected '<vertex> <op> <vertex>'");
        if (e.op != "->" && e.op != "<->" && e.op != "--") fail(line_no, "unknown edge operator '" + e.op + "'");
        if (!valid_label(e.a) || !valid_label(e.b)) fail(line_no, "bad vertex label");
        for (const auto* name : {&e.a, &e.b})
            if (std::find(seen.begin(), seen.end(), *name) == seen.end()) seen.push_back(*name);
        raw.push_back(std::move(e));
    }

    MixedGraph g;
    try {
        g = MixedGraph(header ? *header : seen);
    } catch (const DomainError& err) {
        throw ParseError(std::string("edge list header: ") + err.what());
    }
    for (const RawEdge& e : raw) {
        Vertex a = 0;
        Vertex b = 0;
        try {
            a = g.index_of(e.a);
            b = g.index_of(e.b);
        } catch (const DomainError& err) {
            fail(e.line, err.what());
        }
        if (a == b) fail(e.line, "self-loop on '" + e.a + "'");
        if (g.adjacent(a, b)) fail(e.line, "second edge between '" + e.a + "' and '" + e.b + "'");
        if (e.op == "->") g.add_directed(a, b);
        else if (e.op == "<->") g.add_bidirected(a, b);
        else g.add_undirected(a, b);
    }
    return g;
}

std::string format_edge(const MixedGraph& g, const Edge& e) {
    switch (e.kind()) {
    case EdgeKind::undirected: return g.label(e.u) + " -- " + g.label(e.v);
    case EdgeKind::bidirected: return g.label(e.u) + " <-> " + g.label(e.v);
    case EdgeKind::directed:
        return e.at_v == Mark::arrow ? g.label(e.u) + " -> " + g.label(e.v) : g.label(e.v) + " -> " + g.label(e.u);
    }
    return {};
}

std::string format_edge_list(const MixedGraph& g) {
    std::string out = "vertices: ";
    for (int i = 0; i < g.size(); ++i) {
        if (i > 0) out += ',';
        out += g.label(i);
    }
    out += '\n';
    for (const Edge& e : g.edges()) {
        out += format_edge(g, e);
        out += '\n';
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() + "'");
    }
}

MixedGraph read_edge_list(const std::filesystem::path& path) { return parse_edge_list(read_file(path)); }

void write_edge_list(const std::filesystem::path& path, const MixedGraph& g) {
    write_file_atomic(path, format_edge_list(g));
}

}  // namespace mvrcg
