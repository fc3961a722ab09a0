#include "zdhom/formulas.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "zdhom/errors.hpp"

namespace zdhom {

std::vector<LocalSummary> local_summaries(const Ring& ring) {
  std::vector<LocalSummary> out;
  for (const Ring& f : decompose_local(ring)) {
    LocalSummary s;
    s.unit_count = units(f).size();
    s.is_field = (s.unit_count == f.order - 1);
    out.push_back(s);
  }
  return out;
}

namespace {

std::map<std::vector<LocalSummary>, RankVector>& memo() {
  static std::map<std::vector<LocalSummary>, RankVector> m;
  return m;
}
std::mutex memo_mutex;

}  // namespace

RankVector k_ranks(const std::vector<LocalSummary>& factors) {
  if (factors.empty()) throw invalid_parameter("k_ranks needs at least one factor");
  if (factors.size() == 1) return {};  // a local ring's zero-divisor complex is a cone or void
  std::vector<LocalSummary> key = factors;
  std::sort(key.begin(), key.end());
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }

  // Recursion over the last factor: every nonempty subset S of the first
  // k-1 factors contributes its K0 ranks, shifted up one dimension and
  // weighted by the unit counts of the factors outside S. When S is all of
  // the first k-1 factors and the last factor is a field, that factor
  // contributes u-1 instead of u.
  const std::size_t k = key.size();
  RankVector out;
  const unsigned full = (1u << (k - 1)) - 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    std::vector<LocalSummary> sub;
    unsigned long long weight = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (mask & (1u << i)) sub.push_back(key[i]);
      else weight *= key[i].unit_count;
    }
    if (mask == full && key.back().is_field) weight *= key.back().unit_count - 1;
    else weight *= key.back().unit_count;
    if (weight == 0) continue;
    for (const auto& [dim, rank] : k0_ranks(sub)) out[dim + 1] += rank * weight;
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo().emplace(std::move(key), out);
  return out;
}

RankVector k_ranks(const Ring& ring) { return k_ranks(local_summaries(ring)); }

RankVector k0_ranks(const std::vector<LocalSummary>& factors) {
  if (factors.empty()) throw invalid_parameter("k0_ranks needs at least one factor");
  unsigned long long components = 1;
  for (const auto& f : factors) components *= f.unit_count;
  if (factors.size() == 1 && factors[0].is_field) components -= 1;
  RankVector out = k_ranks(factors);
  if (components) out[0] = components;
  return out;
}

namespace {

// Pascal triangle up to n.
std::vector<std::vector<unsigned long long>> binomials(std::size_t n) {
  std::vector<std::vector<unsigned long long>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

}  // namespace

unsigned long long betti_nonfields(int n, const std::vector<unsigned long long>& unit_counts) {
  const std::size_t k = unit_counts.size();
  if (k == 0 || n < 0 || static_cast<std::size_t>(n) >= k) return 0;
  auto c = binomials(k);
  // a[i][j]: zero outside 0 <= i < j.
  std::vector<std::vector<unsigned long long>> a(k + 1, std::vector<unsigned long long>(k + 1, 0));
  for (std::size_t j = 1; j <= k; ++j) a[0][j] = 1;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)
      for (std::size_t t = 1; t < j; ++t) a[i][j] += c[j - 1][t] * a[i - 1][t];
  unsigned long long v = a[static_cast<std::size_t>(n)][k];
  for (unsigned long long u : unit_counts) v *= u;
  return v;
}

unsigned long long sigma(int j, const std::vector<unsigned long long>& unit_counts) {
  const std::size_t k = unit_counts.size();
  if (j < 0 || static_cast<std::size_t>(j) > k) return 0;
  // Coefficients of prod (u + (u-1) t).
  std::vector<unsigned long long> coeff(k + 1, 0);
  coeff[0] = 1;
  std::size_t deg = 0;
  for (unsigned long long u : unit_counts) {
    for (std::size_t i = deg + 2; i-- > 0;) {
      unsigned long long low = coeff[i] * u;
      unsigned long long high = i ? coeff[i - 1] * (u - 1) : 0;
      coeff[i] = low + high;
    }
    ++deg;
  }
  return coeff[static_cast<std::size_t>(j)];
}

unsigned long long betti_allfields(int n, const std::vector<unsigned long long>& unit_counts) {
  const std::size_t k = unit_counts.size();
  if (k == 0 || n < 0 || static_cast<std::size_t>(n) >= k) return 0;
  const std::size_t j = k - static_cast<std::size_t>(n);
  if (j == 1) return sigma(static_cast<int>(k), unit_counts);
  auto c = binomials(2 * k + 2);
  // A[i][t] with A[i][1] = 1 and
  // A[i][t] = sum_{m=1}^{i+1-t} A[i-m][t-1] * C(i+t-1, m).
  std::vector<std::vector<unsigned long long>> A(k + 1, std::vector<unsigned long long>(k + 1, 0));
  for (std::size_t i = 0; i <= k; ++i) A[i][1] = 1;
  for (std::size_t t = 2; t <= k; ++t)
    for (std::size_t i = t; i <= k; ++i)
      for (std::size_t m = 1; m + t <= i + 1; ++m) A[i][t] += A[i - m][t - 1] * c[i + t - 1][m];
  unsigned long long b = 0;
  for (std::size_t t = 1; t <= j - 1; ++t)
    b += A[j - 1][t] * sigma(static_cast<int>(k - j - t + 1), unit_counts);
  return b;
}

TorsionFreeAssertion torsion_free_assertion(const std::vector<LocalSummary>& factors) {
  return TorsionFreeAssertion{factors};
}

std::string TorsionFreeAssertion::describe() const {
  std::string s = "integral homology of the zero-divisor complex of a product of local rings (";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ", ";
    s += "u=" + std::to_string(factors[i].unit_count) + (factors[i].is_field ? " field" : "");
  }
  return s + ") is torsion-free";
}

}  // namespace zdhom
