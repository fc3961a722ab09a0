#include "zdhom/graph.hpp"

#include <algorithm>

#include "zdhom/errors.hpp"

namespace zdhom {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adj) total += nbrs.size();
  return total / 2;
}

bool Graph::has_edge(uint32_t a, uint32_t b) const {
  const auto& nbrs = adj[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

namespace {

Graph graph_on(const Ring& ring, const std::vector<uint16_t>& verts) {
  Graph g;
  g.labels.reserve(verts.size());
  for (uint16_t v : verts) g.labels.push_back(ring.labels[v]);
  g.adj.resize(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (ring.mul(verts[i], verts[j]) == ring.zero) {
        g.adj[i].push_back(static_cast<uint32_t>(j));
        g.adj[j].push_back(static_cast<uint32_t>(i));
      }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

}  // namespace

Graph zero_divisor_graph(const Ring& ring) { return graph_on(ring, zero_divisors(ring)); }

Graph k0_graph(const Ring& ring) {
  std::vector<uint16_t> verts;
  for (std::size_t a = 0; a < ring.order; ++a)
    if (a != ring.zero) verts.push_back(static_cast<uint16_t>(a));
  return graph_on(ring, verts);
}

Graph complete_multipartite(const std::vector<std::size_t>& part_sizes) {
  Graph g;
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    if (part_sizes[i] == 0) throw invalid_parameter("multipartite part sizes must be positive");
    for (std::size_t j = 0; j < part_sizes[i]; ++j) {
      g.labels.push_back("p" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      part_of.push_back(i);
    }
  }
  const std::size_t n = g.labels.size();
  g.adj.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) {
        g.adj[a].push_back(static_cast<uint32_t>(b));
        g.adj[b].push_back(static_cast<uint32_t>(a));
      }
  return g;
}

namespace {

// Word-packed vertex sets for the clique search.
using Bits = std::vector<uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (uint64_t w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

struct CliqueSearch {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<Bits> nbr;
  std::size_t budget = 0;
  std::size_t found = 0;
  std::vector<uint32_t> current;
  std::vector<std::vector<uint32_t>>* out = nullptr;

  std::size_t overlap(const Bits& a, const Bits& b) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words; ++w)
      c += static_cast<std::size_t>(__builtin_popcountll(a[w] & b[w]));
    return c;
  }

  // Bron-Kerbosch with a pivot chosen to maximize |P & N(pivot)|.
  void expand(Bits p, Bits x) {
    if (popcount(p) == 0 && popcount(x) == 0) {
      if (++found > budget) throw budget_exceeded(budget);
      std::vector<uint32_t> clique = current;
      std::sort(clique.begin(), clique.end());
      out->push_back(std::move(clique));
      return;
    }
    uint32_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    for (std::size_t w = 0; w < words; ++w) {
      uint64_t both = p[w] | x[w];
      while (both) {
        uint32_t v = static_cast<uint32_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(both)));
        both &= both - 1;
        std::size_t score = overlap(p, nbr[v]);
        if (!have || score > best) {
          have = true;
          best = score;
          pivot = v;
        }
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      uint64_t cand = p[w] & ~nbr[pivot][w];
      while (cand) {
        uint32_t v = static_cast<uint32_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(cand)));
        cand &= cand - 1;
        Bits np(words), nx(words);
        for (std::size_t ww = 0; ww < words; ++ww) {
          np[ww] = p[ww] & nbr[v][ww];
          nx[ww] = x[ww] & nbr[v][ww];
        }
        current.push_back(v);
        expand(std::move(np), std::move(nx));
        current.pop_back();
        p[w] &= ~(1ull << (v & 63));
        x[w] |= 1ull << (v & 63);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<uint32_t>> maximal_cliques(const Graph& g, std::size_t budget) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<uint32_t>> result;
  if (n == 0) return result;
  CliqueSearch s;
  s.n = n;
  s.words = (n + 63) / 64;
  s.nbr.assign(n, Bits(s.words, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (uint32_t u : g.adj[v]) s.nbr[v][u >> 6] |= 1ull << (u & 63);
  s.budget = budget;
  s.out = &result;
  Bits p(s.words, 0);
  for (std::size_t v = 0; v < n; ++v) p[v >> 6] |= 1ull << (v & 63);
  s.expand(std::move(p), Bits(s.words, 0));
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace zdhom
