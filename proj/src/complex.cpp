#include "zdhom/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <unordered_set>

#include "zdhom/errors.hpp"

namespace zdhom {

std::size_t default_face_budget() {
  if (const char* env = std::getenv("ZDHOM_FACE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2000000;
}

namespace {

struct FaceHash {
  std::size_t operator()(const std::vector<uint32_t>& f) const {
    std::size_t h = 1469598103934665603ull;
    for (uint32_t v : f) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::string face_string(const std::vector<std::string>& labels,
                        const std::vector<uint32_t>& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) s += ", ";
    // Faces in error messages may carry out-of-range indices; show them raw.
    s += face[i] < labels.size() ? labels[face[i]] : "#" + std::to_string(face[i]);
  }
  return s + "}";
}

}  // namespace

struct SimplicialComplex::FaceCache {
  std::once_flag once;
  std::vector<std::vector<std::vector<uint32_t>>> by_dim;
  std::size_t total = 0;  // all faces, the empty face included
};

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<uint32_t>> facets,
                                                 std::vector<std::string> labels) {
  std::unordered_set<std::string> seen_labels;
  for (const auto& l : labels)
    if (!seen_labels.insert(l).second)
      throw invalid_parameter("duplicate vertex label '" + l + "'");

  std::vector<char> used(labels.size(), 0);
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (uint32_t v : f) {
      if (v >= labels.size())
        throw invalid_parameter("facet vertex index " + std::to_string(v) + " out of range");
      used[v] = 1;
    }
  }
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (!used[v])
      throw invalid_parameter("vertex '" + labels[v] + "' belongs to no facet");

  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Absorption: drop any facet contained in another.
  std::vector<std::vector<uint32_t>> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < facets.size() && !contained; ++j)
      if (i != j && facets[i].size() <= facets[j].size() && facets[i] != facets[j] &&
          std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end()))
        contained = true;
    if (!contained) maximal.push_back(facets[i]);
  }

  SimplicialComplex k;
  k.labels_ = std::move(labels);
  k.facets_ = std::move(maximal);
  return k;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  std::size_t mx = 0;
  for (const auto& f : facets_) mx = std::max(mx, f.size());
  return static_cast<int>(mx) - 1;
}

bool SimplicialComplex::has_face(const std::vector<uint32_t>& face) const {
  if (!std::is_sorted(face.begin(), face.end()) ||
      std::adjacent_find(face.begin(), face.end()) != face.end())
    return false;
  for (uint32_t v : face)
    if (v >= labels_.size()) return false;
  for (const auto& f : facets_)
    if (std::includes(f.begin(), f.end(), face.begin(), face.end())) return true;
  return false;
}

void SimplicialComplex::ensure_faces(std::size_t budget) const {
  std::call_once(cache_->once, [&] {
    std::unordered_set<std::vector<uint32_t>, FaceHash> seen;
    const int dim = dimension();
    std::vector<std::vector<std::vector<uint32_t>>> by_dim(
        static_cast<std::size_t>(std::max(dim + 1, 0)));
    std::size_t total = 1;  // the empty face
    for (const auto& facet : facets_) {
      const std::size_t s = facet.size();
      if (s == 0) continue;
      if (s >= 64) throw budget_exceeded(budget);
      std::vector<uint32_t> sub;
      for (uint64_t mask = 1; mask < (1ull << s); ++mask) {
        sub.clear();
        for (std::size_t b = 0; b < s; ++b)
          if (mask & (1ull << b)) sub.push_back(facet[b]);
        if (seen.insert(sub).second) {
          if (++total > budget) throw budget_exceeded(budget);
          by_dim[sub.size() - 1].push_back(sub);
        }
      }
    }
    for (auto& bucket : by_dim) std::sort(bucket.begin(), bucket.end());
    cache_->by_dim = std::move(by_dim);
    cache_->total = total;
  });
  if (cache_->total > budget) throw budget_exceeded(budget);
}

const std::vector<std::vector<uint32_t>>& SimplicialComplex::faces(int n,
                                                                   std::size_t budget) const {
  static const std::vector<std::vector<uint32_t>> kNone{};
  static const std::vector<std::vector<uint32_t>> kEmptyFace{{}};
  if (is_void()) return kNone;
  if (n == -1) return kEmptyFace;
  if (n < -1 || n > dimension()) return kNone;
  ensure_faces(budget);
  return cache_->by_dim[static_cast<std::size_t>(n)];
}

std::size_t SimplicialComplex::face_count(std::size_t budget) const {
  if (is_void()) return 0;
  ensure_faces(budget);
  return cache_->total;
}

SimplicialComplex clique_complex(const Graph& g, std::size_t budget) {
  return SimplicialComplex::from_facets(maximal_cliques(g, budget), g.labels);
}

SimplicialComplex k_complex(const Ring& ring, std::size_t budget) {
  return clique_complex(zero_divisor_graph(ring), budget);
}

SimplicialComplex k0_complex(const Ring& ring, std::size_t budget) {
  return clique_complex(k0_graph(ring), budget);
}

SimplicialComplex discrete_complex(std::size_t r) {
  std::vector<std::vector<uint32_t>> facets;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) {
    facets.push_back({static_cast<uint32_t>(i)});
    labels.push_back("v" + std::to_string(i + 1));
  }
  return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

namespace {

// Combined label space for two complexes; prefixes are applied only when the
// label sets actually collide, so joining with a complex without vertices
// keeps the other side's labels untouched.
std::vector<std::string> combine_labels(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::unordered_set<std::string> left(k.labels().begin(), k.labels().end());
  bool collide = false;
  for (const auto& s : l.labels())
    if (left.count(s)) {
      collide = true;
      break;
    }
  std::vector<std::string> labels;
  labels.reserve(k.labels().size() + l.labels().size());
  for (const auto& s : k.labels()) labels.push_back(collide ? "L:" + s : s);
  for (const auto& s : l.labels()) labels.push_back(collide ? "R:" + s : s);
  return labels;
}

std::vector<uint32_t> shifted(const std::vector<uint32_t>& f, uint32_t off) {
  std::vector<uint32_t> r;
  r.reserve(f.size());
  for (uint32_t v : f) r.push_back(v + off);
  return r;
}

}  // namespace

std::vector<uint32_t> subcomplex_vertex_map(const SimplicialComplex& a,
                                            const SimplicialComplex& k) {
  std::map<std::string, uint32_t> index;
  for (std::size_t i = 0; i < k.labels().size(); ++i)
    index[k.labels()[i]] = static_cast<uint32_t>(i);
  std::vector<uint32_t> to_k(a.labels().size());
  for (std::size_t i = 0; i < a.labels().size(); ++i) {
    auto it = index.find(a.labels()[i]);
    if (it == index.end())
      throw invalid_parameter("subcomplex vertex '" + a.labels()[i] +
                              "' is not a vertex of the ambient complex");
    to_k[i] = it->second;
  }
  for (const auto& f : a.facets()) {
    std::vector<uint32_t> mapped;
    mapped.reserve(f.size());
    for (uint32_t v : f) mapped.push_back(to_k[v]);
    std::sort(mapped.begin(), mapped.end());
    if (!k.has_face(mapped))
      throw invalid_parameter("subcomplex facet " + face_string(a.labels(), f) +
                              " is not a face of the ambient complex");
  }
  return to_k;
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (k.is_void() || l.is_void()) return SimplicialComplex{};
  auto labels = combine_labels(k, l);
  const auto off = static_cast<uint32_t>(k.labels().size());
  std::vector<std::vector<uint32_t>> facets;
  facets.reserve(k.facets().size() * l.facets().size());
  for (const auto& fk : k.facets())
    for (const auto& fl : l.facets()) {
      std::vector<uint32_t> u = fk;
      for (uint32_t v : fl) u.push_back(v + off);
      facets.push_back(std::move(u));
    }
  return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

SimplicialComplex join_over(const SimplicialComplex& k, const SimplicialComplex& a,
                            const SimplicialComplex& l, std::size_t budget) {
  const std::vector<uint32_t> to_k = subcomplex_vertex_map(a, k);
  auto labels = combine_labels(k, l);
  const auto off = static_cast<uint32_t>(k.labels().size());

  std::size_t a_nonempty = 0, l_nonempty = 0;
  for (const auto& f : a.facets())
    if (!f.empty()) ++a_nonempty;
  for (const auto& f : l.facets())
    if (!f.empty()) ++l_nonempty;
  if (k.facets().size() + l.facets().size() + a_nonempty * l_nonempty > budget)
    throw budget_exceeded(budget);

  std::vector<std::vector<uint32_t>> facets;
  for (const auto& f : k.facets()) facets.push_back(f);
  for (const auto& f : l.facets()) facets.push_back(shifted(f, off));
  for (const auto& fa : a.facets()) {
    if (fa.empty()) continue;
    std::vector<uint32_t> base;
    base.reserve(fa.size());
    for (uint32_t v : fa) base.push_back(to_k[v]);
    std::sort(base.begin(), base.end());
    for (const auto& fl : l.facets()) {
      if (fl.empty()) continue;
      std::vector<uint32_t> u = base;
      for (uint32_t v : fl) u.push_back(v + off);
      facets.push_back(std::move(u));
    }
  }
  if (facets.empty()) return SimplicialComplex{};
  return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

SimplicialComplex link(const SimplicialComplex& k, const std::vector<uint32_t>& face,
                       std::size_t) {
  if (!k.has_face(face))
    throw invalid_parameter("link requires a face of the complex; " +
                            face_string(k.labels(), face) + " is not one");
  if (face.empty()) return k;

  std::vector<std::vector<uint32_t>> rest_facets;
  std::set<uint32_t> used;
  for (const auto& f : k.facets()) {
    if (!std::includes(f.begin(), f.end(), face.begin(), face.end())) continue;
    std::vector<uint32_t> rest;
    std::set_difference(f.begin(), f.end(), face.begin(), face.end(), std::back_inserter(rest));
    for (uint32_t v : rest) used.insert(v);
    rest_facets.push_back(std::move(rest));
  }
  // Compact the vertex set of the link.
  std::map<uint32_t, uint32_t> remap;
  std::vector<std::string> labels;
  for (uint32_t v : used) {
    remap[v] = static_cast<uint32_t>(labels.size());
    labels.push_back(k.labels()[v]);
  }
  for (auto& f : rest_facets)
    for (uint32_t& v : f) v = remap[v];
  return SimplicialComplex::from_facets(std::move(rest_facets), std::move(labels));
}

SurfaceReport surface_check(const SimplicialComplex& k, std::size_t) {
  SurfaceReport rep;
  auto evidence = [&](const std::string& s) {
    if (rep.evidence.size() < 8) rep.evidence.push_back(s);
  };

  if (k.dimension() != 2) {
    rep.reason = "complex has dimension " + std::to_string(k.dimension()) +
                 ", a closed surface must be 2-dimensional";
    return rep;
  }
  std::size_t impure = 0;
  for (const auto& f : k.facets())
    if (f.size() != 3) {
      ++impure;
      evidence("maximal face " + face_string(k.labels(), f) + " is not a triangle");
    }
  if (impure) {
    rep.reason = "complex is not pure: " + std::to_string(impure) +
                 " maximal face(s) are not triangles";
    return rep;
  }

  // Pure and 2-dimensional: the facets are exactly the triangles.
  std::map<std::pair<uint32_t, uint32_t>, std::size_t> edge_tris;
  for (const auto& t : k.facets()) {
    edge_tris[{t[0], t[1]}]++;
    edge_tris[{t[0], t[2]}]++;
    edge_tris[{t[1], t[2]}]++;
  }
  std::size_t bad_edges = 0;
  for (const auto& [e, c] : edge_tris)
    if (c != 2) {
      ++bad_edges;
      evidence("edge " + face_string(k.labels(), {e.first, e.second}) + " lies in " +
               std::to_string(c) + " triangle(s)");
    }
  if (bad_edges) {
    rep.reason = std::to_string(bad_edges) + " edge(s) do not lie in exactly two triangles";
    return rep;
  }

  // Every vertex link must be a single cycle: all degrees 2 and connected.
  const std::size_t n = k.labels().size();
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> star(n);
  for (const auto& t : k.facets()) {
    star[t[0]].push_back({t[1], t[2]});
    star[t[1]].push_back({t[0], t[2]});
    star[t[2]].push_back({t[0], t[1]});
  }
  std::size_t bad_links = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::map<uint32_t, std::vector<uint32_t>> adj;
    for (const auto& [a, b] : star[v]) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    bool ok = !adj.empty();
    for (const auto& [w, nb] : adj)
      if (nb.size() != 2) ok = false;
    if (ok) {
      std::set<uint32_t> seenv;
      std::queue<uint32_t> q;
      q.push(adj.begin()->first);
      seenv.insert(adj.begin()->first);
      while (!q.empty()) {
        uint32_t w = q.front();
        q.pop();
        for (uint32_t u : adj[w])
          if (seenv.insert(u).second) q.push(u);
      }
      ok = seenv.size() == adj.size();
    }
    if (!ok) {
      ++bad_links;
      evidence("link of vertex " + k.labels()[v] + " is not a single cycle");
    }
  }
  if (bad_links) {
    rep.reason = "the link(s) of " + std::to_string(bad_links) + " vertex(es) are not single cycles";
    return rep;
  }

  // Global connectivity through edges.
  std::vector<std::vector<uint32_t>> adj(n);
  for (const auto& [e, c] : edge_tris) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<char> reach(n, 0);
  std::queue<uint32_t> q;
  q.push(0);
  reach[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    uint32_t v = q.front();
    q.pop();
    for (uint32_t u : adj[v])
      if (!reach[u]) {
        reach[u] = 1;
        ++count;
        q.push(u);
      }
  }
  if (count != n) {
    for (std::size_t v = 0; v < n && rep.evidence.size() < 8; ++v)
      if (!reach[v]) evidence("vertex " + k.labels()[v] + " is not reachable from " + k.labels()[0]);
    rep.reason = "complex is disconnected";
    return rep;
  }

  rep.is_closed_surface = true;
  return rep;
}

void export_facets(const SimplicialComplex& k, std::ostream& out) {
  out << "# vertices:";
  for (std::size_t i = 0; i < k.labels().size(); ++i)
    out << (i == 0 ? " " : "\t") << k.labels()[i];
  out << "\n";
  for (const auto& f : k.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << " ";
      out << f[i];
    }
    out << "\n";
  }
}

SimplicialComplex import_facets(std::istream& in) {
  std::string line;
  std::size_t offset = 0;
  if (!std::getline(in, line)) throw parse_error("facet file is empty", 0);
  const std::string header = "# vertices:";
  if (line.rfind(header, 0) != 0)
    throw parse_error("facet file must begin with '" + header + "'", 0);
  std::vector<std::string> labels;
  std::string rest = line.substr(header.size());
  if (!rest.empty()) {
    if (rest[0] == ' ') rest.erase(0, 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t tab = rest.find('\t', start);
      std::string tok = rest.substr(start, tab == std::string::npos ? std::string::npos
                                                                    : tab - start);
      if (tok.empty()) throw parse_error("empty vertex label in header", offset);
      labels.push_back(tok);
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
  }
  offset += line.size() + 1;

  std::vector<std::vector<uint32_t>> facets;
  bool saw_empty = false;
  while (std::getline(in, line)) {
    if (line.empty()) {
      saw_empty = true;
      offset += 1;
      continue;
    }
    std::vector<uint32_t> f;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] == ' ') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(line[pos])))
        throw parse_error("expected a vertex index", offset + pos);
      unsigned long v = 0;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
        v = v * 10 + static_cast<unsigned long>(line[pos] - '0');
        if (v >= labels.size() && v > 1000000)
          throw parse_error("vertex index out of range", offset + pos);
        ++pos;
      }
      if (v >= labels.size()) throw parse_error("vertex index out of range", offset + pos);
      f.push_back(static_cast<uint32_t>(v));
    }
    facets.push_back(std::move(f));
    offset += line.size() + 1;
  }
  if (facets.empty() && saw_empty) facets.push_back({});
  try {
    return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
  } catch (const invalid_parameter& e) {
    throw parse_error(std::string("invalid facet file: ") + e.what(), offset);
  }
}

}  // namespace zdhom
