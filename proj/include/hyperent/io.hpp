#pragma once

#include <string>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

// HGR text format:
//   # comment lines and blank lines are ignored
//   k n m
//   followed by m lines of k vertex ids each.
// The declared n must match the normalized vertex count.
Hypergraph parse_hgr(const std::string& text);

// Header line, then edges in stored (lexicographic) order, ids ascending
// within each edge, single spaces, trailing newline.
std::string serialize_hgr(const Hypergraph& h);

// {"k": int, "n": int, "edges": [[ids...], ...]}
Hypergraph parse_hypergraph_json(const std::string& text);
std::string serialize_hypergraph_json(const Hypergraph& h);

// Reads a whole file ("-" means stdin) and parses as JSON when the first
// non-space byte is '{', as HGR otherwise.
Hypergraph load_hypergraph(const std::string& path);

std::string read_file(const std::string& path);  // "-" means stdin

}  // namespace hyperent
