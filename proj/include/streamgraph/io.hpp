#pragma once

#include "streamgraph/stream_graph.hpp"

#include <string>
#include <string_view>

namespace sg {

// Line-oriented stream file:
//
//   stream undirected|bipartite|directed [weighted]
//   T <begin> <end>
//   side <node> top|bottom          (bipartite only, before the node's first use)
//   N <node> [<begin> <end>]        (repeatable; no interval declares an absent node)
//   L <u> <v> <begin> <end> [<w>]   (undirected and bipartite)
//   A <u> <v> <begin> <end> [<w>]   (directed arc u -> v)
//   NW <node> <begin> <end> <w>
//
// Any explicit weight, or the 'weighted' header flag, makes the stream
// weighted. '#' starts a comment. Numbers are integers, decimals, exponents or p/q.

/// Throws Error with the offending line number.
StreamGraph parse_stream(std::string_view text);

/// Reads and parses a file; unreadable files throw Error(invalid_argument).
StreamGraph read_stream_file(const std::string& path);

/// Canonical text form; parse_stream(serialize(s)) == s.
std::string serialize(const StreamGraph& s);

/// Integer, terminating decimal, or p/q.
std::string format_number(const Rational& r);

}  // namespace sg
