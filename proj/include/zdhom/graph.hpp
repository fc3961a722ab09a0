#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zdhom/ring.hpp"

namespace zdhom {

// Simple undirected graph on labeled vertices 0..n-1.
struct Graph {
  std::vector<std::string> labels;
  std::vector<std::vector<uint32_t>> adj;  // sorted neighbor lists, no loops

  std::size_t vertex_count() const { return labels.size(); }
  std::size_t edge_count() const;
  bool has_edge(uint32_t a, uint32_t b) const;
};

// Vertices are the nonzero zero-divisors of the ring, with an edge between a
// and b exactly when a*b = 0.
Graph zero_divisor_graph(const Ring& ring);

// Vertices are all nonzero elements; edges as above, so units are isolated.
Graph k0_graph(const Ring& ring);

// Complete multipartite graph with parts of the given sizes. Vertices are
// labeled "p<i>_<j>" for the j-th vertex of part i (both 1-based).
Graph complete_multipartite(const std::vector<std::size_t>& part_sizes);

// All maximal cliques (as sorted vertex lists) in lexicographic order.
// Throws budget_exceeded once more than `budget` cliques are found.
std::vector<std::vector<uint32_t>> maximal_cliques(const Graph& g, std::size_t budget);

}  // namespace zdhom
