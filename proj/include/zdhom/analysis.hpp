#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdhom/complex.hpp"
#include "zdhom/homology.hpp"
#include "zdhom/ring.hpp"

namespace zdhom {

// Evidence that a complex fails the link condition: a face whose link has
// nonvanishing reduced homology below its dimension.
struct CMWitness {
  std::vector<uint32_t> face;  // vertex indices in the ambient complex
  std::vector<std::string> face_labels;
  int dim = 0;                 // i with nonzero reduced H_i(link)
  std::size_t rank = 0;        // dimension of that homology group over the chosen field
};

struct CMVerdict {
  bool is_cm = true;
  Coeff coefficients;
  std::optional<CMWitness> witness;  // present exactly when is_cm is false
};

// Cohen-Macaulayness over a field via the link condition: every face F
// (including the empty one, whose link is the whole complex) must have
// vanishing reduced H_i(lk F) for all i < dim lk F. Witnesses are reported
// deterministically: the first offending face in (dimension, lex) order,
// with the smallest offending i. Coefficients must be Q or F_p. The void
// complex passes vacuously. The parallel variant distributes links over
// OpenMP threads; the serial one is the reference.
CMVerdict reisner_cm(const SimplicialComplex& k, Coeff coefficients = Coeff::rationals(),
                     std::size_t budget = default_face_budget());
CMVerdict reisner_cm_serial(const SimplicialComplex& k, Coeff coefficients = Coeff::rationals(),
                            std::size_t budget = default_face_budget());

// Ring-level classification of when the zero-divisor clique complex is CM,
// by the shape of the local decomposition.
//
// A socle layer larger than 2 makes the complex a cone, but a cone need not
// be Cohen-Macaulay: its vertex links can be disconnected. Z81 is the
// smallest example (the link of {27, 54} is a 5-simplex plus 18 isolated
// vertices). The shape alone therefore proves CM-ness only when the maximal
// ideal squares to zero (the complex is then a full simplex); with nilpotency
// index >= 3 the verdict comes from the per-instance link condition.
struct CMClassification {
  enum class Tag {
    IsField,          // k = 1, field: void complex, vacuously CM
    TwoFields,        // k = 2, both factors fields: complete bipartite, CM
    Z2X2TimesField,   // k = 2, field times a local non-field of order 4: CM
    LocalLargeSocle,  // k = 1, socle layer larger than 2 (see note above)
    BorderlineSocle2, // k = 1, socle layer of size exactly 2: decided per instance
    NotCM,            // everything else
  };
  Tag tag = Tag::NotCM;
  std::string detail;
  std::optional<bool> shape_verdict;        // CM status provable from the shape, when it is
  std::optional<CMVerdict> reisner_result;  // cross-check; absent when skipped
  bool reisner_skipped = false;             // true when the budget stopped the cross-check

  // Overall CM status: the shape-level verdict when one is provable,
  // otherwise the link-condition result (empty when that was skipped).
  std::optional<bool> is_cm() const;
};
CMClassification classify_cm(const Ring& ring, Coeff coefficients = Coeff::rationals(),
                             std::size_t budget = default_face_budget());

// Why the zero-divisor clique complex of this ring cannot triangulate a
// closed surface. Walks the elimination by the number k of local factors;
// in the one surviving shape (k = 3, all fields, all unit counts 2) it runs
// the concrete surface test and reports its failure evidence.
struct SurfaceObstruction {
  bool possible = false;  // always false; kept explicit for reporting
  std::string reason;
  std::vector<std::string> evidence;
};
SurfaceObstruction surface_obstruction(const Ring& ring,
                                       std::size_t budget = default_face_budget());

}  // namespace zdhom
