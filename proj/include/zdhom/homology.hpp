#pragma once

#include <map>
#include <string>
#include <vector>

#include "zdhom/complex.hpp"
#include "zdhom/snf.hpp"

namespace zdhom {

// Coefficient system for homology computations.
struct Coeff {
  enum class Field { Z, Q, Fp };
  Field field = Field::Z;
  unsigned p = 0;  // prime, used when field == Fp

  static Coeff integers() { return {}; }
  static Coeff rationals() { return {Field::Q, 0}; }
  static Coeff mod(unsigned prime) { return {Field::Fp, prime}; }
};

// Ranks and torsion per dimension. `rank` has an entry for every dimension
// that was computed (including zeros); `torsion` only lists dimensions with
// nontrivial invariant factors, which can occur only over the integers.
struct HomologyProfile {
  bool reduced = true;
  std::map<int, std::size_t> rank;
  std::map<int, std::vector<Int>> torsion;

  bool torsion_free() const { return torsion.empty(); }
  std::map<int, std::size_t> nonzero_ranks() const;
};

// Matrix of the boundary map from n-faces to (n-1)-faces. Faces are ordered
// lexicographically by their sorted vertex lists; the orientation of a face
// is its ascending vertex order, so the column entry for dropping the i-th
// vertex is (-1)^i. With reduced = true, n = 0 yields the augmentation row
// of ones mapping vertices to the empty face.
IntMatrix boundary_matrix(const SimplicialComplex& k, int n, bool reduced,
                          std::size_t budget = default_face_budget());

// Simplicial homology of k. Over the integers this yields ranks and torsion;
// over Q or F_p, ranks only. Dimensions -1 (reduced only) through dim(k) are
// reported. The parallel variant fans the per-dimension reductions out over
// OpenMP threads; the serial one is the reference implementation.
HomologyProfile homology(const SimplicialComplex& k, bool reduced = true, Coeff coeff = {},
                         std::size_t budget = default_face_budget());
HomologyProfile homology_serial(const SimplicialComplex& k, bool reduced = true,
                                Coeff coeff = {}, std::size_t budget = default_face_budget());

// Checks the join rule: reduced H_n of the join of the two clique complexes
// should match the convolution sum of the factors' reduced ranks shifted by
// one, provided both factors have torsion-free integral homology.
struct JoinVerification {
  enum class Status { Matched, Mismatched, SkippedHypothesisNotMet };
  Status status = Status::Matched;
  std::string detail;
  std::map<int, std::size_t> predicted;  // reduced ranks by dimension
  std::map<int, std::size_t> computed;
};
JoinVerification verify_join_formula(const Graph& g1, const Graph& g2,
                                     std::size_t budget = default_face_budget());

// Checks the attachment rule: for a subcomplex a of x (faces given in x's
// labels), reduced H_n of join_over(x, a, r isolated vertices) should be
// rank_n(x) + r * rank_{n-1}(a). The rule needs H_*(a) torsion-free and the
// map induced on homology by the inclusion of a into x to vanish; the map is
// certified by testing representative cycles of a for being boundaries in x.
// When certification is too expensive the instance is still compared but
// flagged Unverified.
struct JoinOverVerification {
  enum class Hypothesis { Met, NotMet, Unverified };
  Hypothesis hypothesis = Hypothesis::Met;
  bool compared = false;  // false exactly when hypothesis == NotMet
  bool matched = false;   // meaningful when compared
  std::string detail;
  std::map<int, std::size_t> predicted;
  std::map<int, std::size_t> computed;
};
JoinOverVerification verify_join_over_formula(const SimplicialComplex& x,
                                              const SimplicialComplex& a, std::size_t r,
                                              std::size_t budget = default_face_budget());

}  // namespace zdhom
