#pragma once

#include <string>
#include <string_view>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Decode one graph6 line (no trailing newline).  Only the short form
/// (n <= 62, single header byte n+63) is accepted.
///
/// Errors: MalformedHeader (empty line or header byte outside 63..125),
/// LongFormUnsupported ('~' header), InvalidCharacter (body byte outside
/// 63..126), LengthMismatch (wrong body length), TrailingBitsNonzero
/// (padding bits set), TooManyVertices (n > vertex_cap).
Graph decode_graph6(std::string_view text, int vertex_cap = kMaxVertices);

/// Encode in short-form graph6.  UnsupportedSize if n > 62.
std::string encode_graph6(const Graph& g);

}  // namespace cyclex
