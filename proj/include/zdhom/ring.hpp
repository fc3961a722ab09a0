#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdhom/errors.hpp"

namespace zdhom {

// Default cap on ring orders for the constructors that enforce one
// (make_galois_field, product) and the threshold below which axiom checks are
// exhaustive rather than sampled.
inline constexpr std::size_t kDefaultOrderCap = 512;

// A finite commutative unital ring given by explicit element-indexed tables.
// Elements are indices 0..order-1; the tables are dense, so everything
// downstream (units, ideals, idempotents) is a table walk. Orders stay small
// (the cap is 512 by default), which keeps the quadratic storage trivial.
struct Ring {
  std::size_t order = 0;
  std::vector<uint16_t> add_table;  // order*order, row-major
  std::vector<uint16_t> mul_table;
  uint16_t zero = 0;
  uint16_t one = 0;
  std::vector<std::string> labels;  // display string per element
  std::string name;                 // display name (normalized spec string)

  uint16_t add(uint16_t a, uint16_t b) const { return add_table[a * order + b]; }
  uint16_t mul(uint16_t a, uint16_t b) const { return mul_table[a * order + b]; }
  uint16_t neg(uint16_t a) const;          // additive inverse
  bool is_unit(uint16_t a) const;          // has a multiplicative inverse
  uint16_t element_by_label(const std::string& label) const;  // throws if absent
};

// Per-local-factor data: the maximal ideal m, the least v with m^v = 0, the
// unit count, and the socle layer m^{v-1}. For a field, v = 1 and the socle
// layer is m^0 = R by the empty-product convention.
struct LocalProfile {
  std::vector<uint16_t> maximal_ideal;  // sorted element indices
  unsigned nilpotency_index = 0;        // v
  std::size_t unit_count = 0;           // u = |R| - |m|
  std::vector<uint16_t> socle_layer;    // m^{v-1}, sorted
  bool is_field = false;
};

Ring make_zmod(unsigned long n);
Ring make_galois_field(unsigned p, unsigned k, std::size_t cap = kDefaultOrderCap);
// f is the coefficient list of a monic polynomial, ascending degree
// (f[i] = coefficient of x^i), degree >= 1.
Ring make_univariate_quotient(unsigned p, const std::vector<unsigned>& f);
// gens are exponent vectors of the monomial generators; the ideal must be
// cofinite (every variable appears as a pure power among the generators).
Ring make_monomial_quotient(unsigned p, unsigned nvars,
                            const std::vector<std::vector<unsigned>>& gens);
Ring product(const std::vector<Ring>& factors, std::size_t cap = kDefaultOrderCap);

std::vector<uint16_t> units(const Ring& ring);
// Nonzero elements with a nonzero annihilator. In a finite commutative ring
// this is exactly the nonzero non-units.
std::vector<uint16_t> zero_divisors(const Ring& ring);

// Returns the profile when the non-units are additively closed (i.e. the ring
// is local), empty otherwise.
std::optional<LocalProfile> is_local(const Ring& ring);

// Decomposes into local factors via the primitive idempotents; each factor is
// the ideal eR with identity e, its labels borrowed from the parent. Factors
// are sorted by (order, is_field, unit_count, labels). A local ring returns
// itself unchanged.
std::vector<Ring> decompose_local(const Ring& ring);

struct AxiomReport {
  bool ok = true;
  std::string detail;  // first violated axiom, with the witnessing elements
};

// Commutativity, identities and additive inverses are always checked in full;
// associativity and distributivity are exhaustive up to exhaustive_cap and
// randomly sampled (sample_count triples) above it.
AxiomReport check_axioms(const Ring& ring, std::size_t exhaustive_cap = kDefaultOrderCap,
                         std::size_t sample_count = 20000, uint64_t seed = 1);

}  // namespace zdhom
