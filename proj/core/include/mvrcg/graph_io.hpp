#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mvrcg/graph.hpp"

namespace mvrcg {

// Edge-list text format:
//
//   # comment
//   vertices: a,b,c,d
//   a -> b
//   b <-> c
//   c -- d
//
// The header fixes vertex order. Without a header, vertices are numbered in
// order of first appearance. Output is canonical: header first, then one line
// per edge in (u < v) order, directed edges written tail first.

MixedGraph parse_edge_list(std::string_view text);
std::string format_edge_list(const MixedGraph& g);

MixedGraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const std::filesystem::path& path, const MixedGraph& g);

/// Human-readable single edge, e.g. "a -> b".
std::string format_edge(const MixedGraph& g, const Edge& e);

/// Writes `contents` to a temporary sibling file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace mvrcg
