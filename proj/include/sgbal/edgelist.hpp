#pragma once

#include <string>

#include "sgbal/signed_graph.hpp"

namespace sgbal {

// Parses the edge-list format: '#' starts a comment to end-of-line, blank
// lines are ignored, and each data line is `<u> <v> <w>` with whitespace
// separation.  u and v are arbitrary non-whitespace labels, compacted to node
// ids 0..n-1 in first-appearance order (the original labels are kept on the
// graph).  w is +1/-1 or a decimal in [-1,1] excluding 0.
//
// Throws std::runtime_error naming the offending line for duplicate edges,
// self-loops, malformed lines and out-of-domain weights.
SignedGraph load_graph(const std::string& text, std::string name = {});

// load_graph on the contents of `path`; errors mention the file name.
SignedGraph load_graph_file(const std::string& path);

// Renders the canonical edge list (u < v, sorted), one edge per line, using
// the graph's node labels.  Weights are +1/-1 for unweighted graphs and
// shortest round-trip decimals otherwise.
std::string write_graph(const SignedGraph& g);

} // namespace sgbal
