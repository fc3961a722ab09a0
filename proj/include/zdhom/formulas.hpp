#pragma once

#include <map>
#include <string>
#include <vector>

#include "zdhom/ring.hpp"

namespace zdhom {

// What the closed-form rank machinery needs to know about a local factor.
struct LocalSummary {
  unsigned long long unit_count = 0;
  bool is_field = false;

  bool operator==(const LocalSummary&) const = default;
  bool operator<(const LocalSummary& o) const {
    if (unit_count != o.unit_count) return unit_count < o.unit_count;
    return is_field < o.is_field;
  }
};

// Reduced Betti numbers by dimension; only nonzero entries are stored.
using RankVector = std::map<int, unsigned long long>;

// Profiles each local factor of the ring (decomposing first if needed),
// in the canonical factor order.
std::vector<LocalSummary> local_summaries(const Ring& ring);

// Reduced Betti numbers of the clique complex on all nonzero elements of the
// product of the given local rings (units sit in it as isolated vertices).
// Dimension 0 counts the extra components the units contribute: the product
// of the unit counts, less one when the ring is a single field. Higher
// dimensions agree with k_ranks.
RankVector k0_ranks(const std::vector<LocalSummary>& factors);

// Reduced Betti numbers of the clique complex on the zero-divisors of the
// product, via the recursion over the last factor. The value is invariant
// under permuting the factors; results are memoized on the sorted multiset
// and the memo is safe for concurrent use.
RankVector k_ranks(const std::vector<LocalSummary>& factors);

// Convenience: k_ranks of the ring's local decomposition.
RankVector k_ranks(const Ring& ring);

// Closed form when every factor is a non-field: b_n = a_{n,k} u_1...u_k with
// a_{0,k} = 1 and a_{n,k} = sum_j C(k-1,j) a_{n-1,j}. Out-of-range n gives 0.
// The n = 0 value is the recurrence seed (the product of the unit counts),
// not a Betti number of the zero-divisor complex itself.
unsigned long long betti_nonfields(int n, const std::vector<unsigned long long>& unit_counts);

// Closed form when every factor is a field: b_{k-1} = sigma_k and, for
// j >= 2, b_{k-j} is an A-weighted sum of sigmas. Same n = 0 caveat.
unsigned long long betti_allfields(int n, const std::vector<unsigned long long>& unit_counts);

// Coefficient of t^j in the product of (u_i + (u_i - 1) t): the sum over
// j-subsets of prod (u-1) inside times prod u outside. Zero outside 0..k.
unsigned long long sigma(int j, const std::vector<unsigned long long>& unit_counts);

// Claim that the integral homology of the zero-divisor complex of a product
// of these factors carries no torsion; the test harness evaluates it against
// directly computed profiles.
struct TorsionFreeAssertion {
  std::vector<LocalSummary> factors;
  std::string describe() const;
};
TorsionFreeAssertion torsion_free_assertion(const std::vector<LocalSummary>& factors);

}  // namespace zdhom
