#pragma once

#include "hermspec/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hermspec {

/// Thrown for malformed graph text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// digraph6: '&', the vertex count in graph6 N(n) form, then the n*n adjacency bits row by row,
/// packed six to a byte and offset by 63.
std::string to_digraph6(const OrientedGraph& d);
OrientedGraph from_digraph6(std::string_view text);

/// Line format for mixed graphs: `mixed <n>` followed by `u > v` per arc and `u - v` per edge.
std::string to_mixed_text(const MixedGraph& d);
/// Line format for signed graphs: `signed <n>` followed by `u + v` or `u - v` per edge.
std::string to_signed_text(const SignedGraph& s);

using AnyGraph = std::variant<MixedGraph, SignedGraph>;

/// Reads every graph in `text`. Accepts digraph6 lines (one graph per line), `mixed` blocks and
/// `signed` blocks, in any mix. Blank lines and lines starting with '#' are ignored.
std::vector<AnyGraph> read_graphs(std::string_view text);
/// Exactly one graph; throws ParseError otherwise.
AnyGraph read_graph(std::string_view text);

/// digraph6 for oriented graphs, the mixed line format otherwise.
std::string encode(const MixedGraph& d);
std::string encode(const SignedGraph& s);

}  // namespace hermspec
