// Text formats. A matroid file starts with one header line:
//   uniform r n
//   binary r n      followed by r rows of n '0'/'1' characters
//   graph n m       followed by m lines "u v", vertices 0-indexed
//   cograph n m     same body, read as the co-graphic matroid
// '#' starts a comment. Subsets are space-separated element indices.
#pragma once

#include <optional>
#include <string>

#include "rainbow/binary.hpp"
#include "rainbow/graphic.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow {

enum class MatroidKind { kUniform, kBinary, kGraph, kCograph };

struct MatroidFile {
  MatroidKind kind;
  Matroid matroid;
  std::optional<Graph> graph;
  std::optional<BinaryMatroid> binary;
};

/// as_cograph turns a `graph` header into `cograph`.
MatroidFile parse_matroid(const std::string& text, bool as_cograph = false);
/// Accepts both `graph` and `cograph` headers.
Graph parse_graph(const std::string& text);

std::string format_uniform(int rank, int n);
std::string format_binary(const BinaryMatroid& b);
std::string format_graph(const Graph& g, bool cograph = false);

/// Whole file contents; InputError if it cannot be read.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rainbow
