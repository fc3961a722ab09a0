#include "zdhom/analysis.hpp"

#include <atomic>
#include <exception>

#include "zdhom/errors.hpp"
#include "zdhom/formulas.hpp"

namespace zdhom {

namespace {

CMVerdict reisner_impl(const SimplicialComplex& k, Coeff coeff, std::size_t budget,
                       bool parallel) {
  if (coeff.field == Coeff::Field::Z)
    throw invalid_parameter(
        "Cohen-Macaulay testing is defined over a field; pass Q or F_p coefficients");
  CMVerdict verdict;
  verdict.coefficients = coeff;
  if (k.is_void()) return verdict;  // no faces to test

  // Faces in (dimension, lex) order, the empty face first. The witness, if
  // any, is the first face in this order whose link has homology below its
  // dimension, reported with the smallest offending degree.
  std::vector<std::vector<uint32_t>> faces;
  faces.push_back({});
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& f : k.faces(d, budget)) faces.push_back(f);

  const std::size_t n = faces.size();
  std::vector<int> bad_dim(n, 0);
  std::vector<std::size_t> bad_rank(n, 0);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> first_bad{n};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long long raw = 0; raw < static_cast<long long>(n); ++raw) {
    const auto i = static_cast<std::size_t>(raw);
    if (i >= first_bad.load(std::memory_order_relaxed)) continue;
    try {
      SimplicialComplex lk = link(k, faces[i], budget);
      const int dl = lk.dimension();
      // dl <= 0 passes: the only degree below is -1, and reduced H_-1
      // vanishes for every nonempty complex.
      if (dl <= 0) continue;
      HomologyProfile h = homology_serial(lk, true, coeff, budget);
      for (int d = -1; d < dl; ++d) {
        auto it = h.rank.find(d);
        if (it == h.rank.end() || it->second == 0) continue;
        bad_dim[i] = d;
        bad_rank[i] = it->second;
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
#ifndef _OPENMP
  (void)parallel;
#endif

  // Serial semantics: the scan stops at the first bad face, so only errors
  // strictly before it are real.
  const std::size_t bad = first_bad.load();
  for (std::size_t i = 0; i < std::min(bad, n); ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  if (bad < n) {
    verdict.is_cm = false;
    CMWitness w;
    w.face = faces[bad];
    for (uint32_t v : w.face) w.face_labels.push_back(k.labels()[v]);
    w.dim = bad_dim[bad];
    w.rank = bad_rank[bad];
    verdict.witness = std::move(w);
  }
  return verdict;
}

}  // namespace

CMVerdict reisner_cm(const SimplicialComplex& k, Coeff coefficients, std::size_t budget) {
  return reisner_impl(k, coefficients, budget, true);
}

CMVerdict reisner_cm_serial(const SimplicialComplex& k, Coeff coefficients,
                            std::size_t budget) {
  return reisner_impl(k, coefficients, budget, false);
}

std::optional<bool> CMClassification::is_cm() const {
  if (shape_verdict) return shape_verdict;
  if (reisner_result) return reisner_result->is_cm;
  return std::nullopt;
}

CMClassification classify_cm(const Ring& ring, Coeff coefficients, std::size_t budget) {
  CMClassification c;
  std::vector<Ring> factors = decompose_local(ring);
  const std::size_t k = factors.size();

  if (k >= 3) {
    c.tag = CMClassification::Tag::NotCM;
    c.shape_verdict = false;
    c.detail = "product of " + std::to_string(k) +
               " local rings: vertex links are disconnected, so the complex is not "
               "Cohen-Macaulay";
  } else if (k == 2) {
    const bool f0 = is_local(factors[0]).value().is_field;
    const bool f1 = is_local(factors[1]).value().is_field;
    if (f0 && f1) {
      c.tag = CMClassification::Tag::TwoFields;
      c.shape_verdict = true;
      c.detail = "product of two fields (orders " + std::to_string(factors[0].order) +
                 " and " + std::to_string(factors[1].order) +
                 "): the complex is complete bipartite, hence Cohen-Macaulay";
    } else if (f0 != f1) {
      const Ring& nonfield = f0 ? factors[1] : factors[0];
      const Ring& field = f0 ? factors[0] : factors[1];
      if (nonfield.order == 4) {
        c.tag = CMClassification::Tag::Z2X2TimesField;
        c.shape_verdict = true;
        c.detail = "local non-field of order 4 times a field of order " +
                   std::to_string(field.order) +
                   ": the complex is connected and 1-dimensional, hence Cohen-Macaulay";
      } else {
        c.tag = CMClassification::Tag::NotCM;
        c.shape_verdict = false;
        c.detail = "field times a local non-field of order " +
                   std::to_string(nonfield.order) +
                   " > 4: the non-field part contributes a disconnected link";
      }
    } else {
      c.tag = CMClassification::Tag::NotCM;
      c.shape_verdict = false;
      c.detail = "product of two local non-fields: not Cohen-Macaulay";
    }
  } else {
    const auto prof = is_local(ring).value();
    if (prof.is_field) {
      c.tag = CMClassification::Tag::IsField;
      c.shape_verdict = true;
      c.detail = "field: the zero-divisor complex is void, vacuously Cohen-Macaulay";
    } else if (prof.socle_layer.size() > 2) {
      c.tag = CMClassification::Tag::LocalLargeSocle;
      if (prof.nilpotency_index == 2) {
        c.shape_verdict = true;
        c.detail = "local ring whose maximal ideal squares to zero, socle of size " +
                   std::to_string(prof.socle_layer.size()) +
                   " > 2: the complex is a full simplex, hence Cohen-Macaulay";
      } else {
        c.detail = "local ring with socle layer of size " +
                   std::to_string(prof.socle_layer.size()) +
                   " > 2: the complex is a cone, but a cone's vertex links need not be "
                   "Cohen-Macaulay; the link condition decides the instance";
      }
    } else {
      c.tag = CMClassification::Tag::BorderlineSocle2;
      c.detail = "local ring with socle layer of size 2: decided by the link condition "
                 "on the instance";
    }
  }

  try {
    c.reisner_result = reisner_cm(k_complex(ring, budget), coefficients, budget);
  } catch (const budget_exceeded&) {
    c.reisner_skipped = true;
  }
  return c;
}

SurfaceObstruction surface_obstruction(const Ring& ring, std::size_t budget) {
  SurfaceObstruction s;
  const std::vector<LocalSummary> factors = local_summaries(ring);
  const std::size_t k = factors.size();

  if (k >= 4) {
    s.reason = "with " + std::to_string(k) +
               " local factors the complex contains a simplex of dimension " +
               std::to_string(k - 1) + "; a closed surface is 2-dimensional";
    return s;
  }
  if (k <= 2) {
    s.reason = "with " + std::to_string(k) +
               (k == 1 ? " local factor" : " local factors") +
               " reduced H_2 vanishes and the homology is torsion-free; every closed "
               "surface has H_2 or 2-torsion";
    return s;
  }

  // k == 3: decide by the rank of reduced H_2.
  RankVector ranks = k_ranks(factors);
  const unsigned long long b2 = ranks.count(2) ? ranks.at(2) : 0;
  if (b2 == 0) {
    s.reason = "a local factor with unit count 1 forces reduced H_2 = 0; together with "
               "torsion-freeness this rules out every closed surface";
    return s;
  }
  if (b2 >= 2) {
    s.reason = "reduced H_2 has rank " + std::to_string(b2) +
               "; a connected closed orientable surface has rank 1, and torsion-freeness "
               "rules out the rest";
    return s;
  }

  // The one shape with H_2 of rank 1: three fields with two units each.
  SurfaceReport rep = surface_check(k_complex(ring, budget), budget);
  if (rep.is_closed_surface) {
    s.possible = true;
    s.reason = "the complex passes the closed-surface test";
    return s;
  }
  s.reason = "reduced H_2 has rank 1, but the complex is not a closed surface: " + rep.reason;
  s.evidence = rep.evidence;
  return s;
}

}  // namespace zdhom
