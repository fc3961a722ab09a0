#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "zdhom/graph.hpp"
#include "zdhom/ring.hpp"

namespace zdhom {

// Default ceiling on the total number of faces a complex may enumerate,
// overridable through the ZDHOM_FACE_BUDGET environment variable.
std::size_t default_face_budget();

// An abstract simplicial complex, stored by its facets (maximal faces).
//
// Two degenerate complexes are kept distinct: the void complex has no faces
// at all (facets is empty), while the empty complex has the empty face as its
// sole facet (facets is {{}}). dimension() reports -2 and -1 for them.
//
// Faces are enumerated lazily and cached; the cache is shared between copies
// and safe for concurrent reads once built.
class SimplicialComplex {
 public:
  SimplicialComplex();  // the void complex

  // Normalizes the input: sorts each facet, drops duplicates, removes faces
  // contained in another, and orders the facet list lexicographically.
  // Vertices mentioned by no facet do not exist; every label must be distinct.
  static SimplicialComplex from_facets(std::vector<std::vector<uint32_t>> facets,
                                       std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<uint32_t>>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
  int dimension() const;  // -2 for void, -1 for empty
  std::size_t vertex_count() const { return labels_.size(); }

  // All faces of dimension n (n = -1 gives {{}} unless void), sorted
  // lexicographically. Enumeration respects `budget` across all dimensions
  // and throws budget_exceeded when the complex is larger.
  const std::vector<std::vector<uint32_t>>& faces(
      int n, std::size_t budget = default_face_budget()) const;
  // All dimensions >= 0, plus the empty face.
  std::size_t face_count(std::size_t budget = default_face_budget()) const;
  bool has_face(const std::vector<uint32_t>& face) const;

 private:
  struct FaceCache;
  std::vector<std::string> labels_;
  std::vector<std::vector<uint32_t>> facets_;
  std::shared_ptr<FaceCache> cache_;
  void ensure_faces(std::size_t budget) const;
};

// Flag complex of g: faces are exactly the cliques. The facet list comes from
// maximal clique enumeration under the face budget.
SimplicialComplex clique_complex(const Graph& g, std::size_t budget = default_face_budget());

// Clique complex of the zero-divisor graph of the ring. For a field this is
// the void complex (no zero-divisors, hence no vertices).
SimplicialComplex k_complex(const Ring& ring, std::size_t budget = default_face_budget());

// Clique complex of the graph on all nonzero elements; units show up as
// isolated vertices.
SimplicialComplex k0_complex(const Ring& ring, std::size_t budget = default_face_budget());

// r isolated vertices labeled "v1".."vr"; r = 0 gives the void complex.
SimplicialComplex discrete_complex(std::size_t r);

// Join: faces are all unions of a face of k with a face of l. When the two
// label sets collide, labels are disambiguated with "L:" and "R:" prefixes;
// joining with the empty complex returns the other complex unchanged.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

// Join of l onto k along a subcomplex a of k: the faces are those of k, those
// of l, and every union of a nonempty face of a with a nonempty face of l.
// Throws invalid_parameter if some facet of a is not a face of k. A void a
// yields the disjoint union; a = k reduces to the plain join.
SimplicialComplex join_over(const SimplicialComplex& k, const SimplicialComplex& a,
                            const SimplicialComplex& l,
                            std::size_t budget = default_face_budget());

// Index map sending each vertex of a to the vertex of k carrying the same
// label. Validates that every facet of a is a face of k; throws
// invalid_parameter otherwise.
std::vector<uint32_t> subcomplex_vertex_map(const SimplicialComplex& a,
                                            const SimplicialComplex& k);

// Link of a face: lk(F) = {G : G disjoint from F, G union F a face}.
// F must be a face of k (else invalid_parameter); link(k, {}) == k.
SimplicialComplex link(const SimplicialComplex& k, const std::vector<uint32_t>& face,
                       std::size_t budget = default_face_budget());

// Closed-surface test for a 2-dimensional complex.
struct SurfaceReport {
  bool is_closed_surface = false;
  std::string reason;                            // empty when the test passes
  std::vector<std::string> evidence;             // offending faces/vertices, a few of each
};
SurfaceReport surface_check(const SimplicialComplex& k,
                            std::size_t budget = default_face_budget());

// Facet-list text format: first line "# vertices:" followed by tab-separated
// labels, then one facet per line as space-separated ascending vertex
// indices. The empty complex is encoded by a single blank facet line; the
// void complex by the header alone.
void export_facets(const SimplicialComplex& k, std::ostream& out);
SimplicialComplex import_facets(std::istream& in);

}  // namespace zdhom
