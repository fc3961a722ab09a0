#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "zdhom/snf.hpp"

using namespace zdhom;

namespace {

IntMatrix dense(std::size_t r, std::size_t c, std::vector<long long> vals) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r * c; ++i) m.data[i] = vals[i];
  return m;
}

SparseIntMatrix to_sparse(const IntMatrix& m) {
  SparseIntMatrix s;
  s.rows = m.rows;
  s.cols = m.cols;
  s.entries.resize(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0)
        s.entries[i].push_back({static_cast<uint32_t>(j),
                                static_cast<long long>(m.at(i, j))});
  return s;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (auto& e : m.data) e = d(rng);
  return m;
}

}  // namespace

TEST_SUITE("snf") {

TEST_CASE("pinned examples") {
  SNFResult r = smith_normal_form(dense(2, 2, {1, 2, 2, 4}));
  CHECK(r.rank == 1);
  CHECK(r.invariant_factors == std::vector<Int>{1});

  r = smith_normal_form(dense(2, 2, {2, 0, 0, 3}));
  CHECK(r.rank == 2);
  CHECK(r.invariant_factors == std::vector<Int>{1, 6});

  r = smith_normal_form(dense(3, 4, std::vector<long long>(12, 0)));
  CHECK(r.rank == 0);
  CHECK(r.invariant_factors.empty());

  r = smith_normal_form(IntMatrix{});  // 0 x 0
  CHECK(r.rank == 0);

  r = smith_normal_form(dense(3, 3, {2, 4, 4, -6, 6, 12, 10, 4, 16}));
  CHECK(r.invariant_factors == std::vector<Int>{2, 2, 156});

  r = smith_normal_form(dense(3, 2, {6, 10, 0, 0, 4, 8}));
  CHECK(r.rank == 2);
  CHECK(r.invariant_factors == std::vector<Int>{2, 4});
}

TEST_CASE("dense and sparse overloads agree") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    IntMatrix m = random_matrix(rng, rows, cols, trial < 20 ? 4 : 60);
    SNFResult a = smith_normal_form(m);
    SNFResult b = smith_normal_form(to_sparse(m));
    CHECK(a.rank == b.rank);
    CHECK(a.invariant_factors == b.invariant_factors);
  }
}

TEST_CASE("sparse path survives machine-word overflow") {
  // Unit pivots combined with entries near 2^40 force intermediate products
  // past 64 bits; the eliminator must restart in big integers, not wrap.
  const long long big = 1ll << 40;
  IntMatrix m = dense(3, 3, {1, big, big, big, 1, big, big, big, 1});
  SNFResult a = smith_normal_form(m);
  SNFResult b = smith_normal_form(to_sparse(m));
  CHECK(a.rank == b.rank);
  CHECK(a.invariant_factors == b.invariant_factors);
  // Determinant-based sanity: the product of the factors divides |det|, and
  // here equals it since the matrix is square of full rank.
  Int det = 1 + 2 * Int(big) * big * big - 3 * Int(big) * big;
  Int prod = 1;
  for (const Int& f : a.invariant_factors) prod *= f;
  CHECK(prod == abs(det));
}

TEST_CASE("invariant factors divide in a chain and ignore permutations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
    IntMatrix m = random_matrix(rng, rows, cols, 9);
    SNFResult r = smith_normal_form(m);
    CHECK(r.rank == r.invariant_factors.size());
    for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i) {
      CHECK(r.invariant_factors[i] > 0);
      CHECK(r.invariant_factors[i + 1] % r.invariant_factors[i] == 0);
    }

    // Shuffle rows and columns; the invariant factors must not move.
    std::vector<std::size_t> rp(rows), cp(cols);
    for (std::size_t i = 0; i < rows; ++i) rp[i] = i;
    for (std::size_t j = 0; j < cols; ++j) cp[j] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix p(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) p.at(i, j) = m.at(rp[i], cp[j]);
    SNFResult rs = smith_normal_form(p);
    CHECK(rs.invariant_factors == r.invariant_factors);
  }
}

TEST_CASE("rank_mod_p") {
  IntMatrix d23 = dense(2, 2, {2, 0, 0, 3});
  CHECK(rank_mod_p(d23, 2) == 1);
  CHECK(rank_mod_p(d23, 3) == 1);
  CHECK(rank_mod_p(d23, 5) == 2);
  CHECK(rank_mod_p(to_sparse(d23), 2) == 1);

  // Over F_p the rank drops exactly where p divides an invariant factor.
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(rng, 2 + rng() % 4, 2 + rng() % 4, 8);
    SNFResult r = smith_normal_form(m);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      std::size_t expect = 0;
      for (const Int& f : r.invariant_factors)
        if (f % p != 0) ++expect;
      CHECK(rank_mod_p(m, p) == expect);
      CHECK(rank_mod_p(to_sparse(m), p) == expect);
    }
  }
}

TEST_CASE("transforms satisfy U * A * V = S") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, rows, cols, 7);
    SNFTransforms t = smith_with_transforms(m);
    IntMatrix prod = multiply(multiply(t.u, m), t.v);
    REQUIRE(prod.rows == t.s.rows);
    REQUIRE(prod.cols == t.s.cols);
    CHECK(prod.data == t.s.data);
    // S is diagonal with the invariant factors up front.
    for (std::size_t i = 0; i < t.s.rows; ++i)
      for (std::size_t j = 0; j < t.s.cols; ++j)
        if (i != j) CHECK(t.s.at(i, j) == 0);
    for (std::size_t i = 0; i + 1 < t.rank; ++i)
      CHECK(t.s.at(i + 1, i + 1) % t.s.at(i, i) == 0);
  }
}

TEST_CASE("integer kernel basis") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, rows, cols, 6);
    SNFResult r = smith_normal_form(m);
    auto kernel = integer_kernel_basis(m);
    CHECK(kernel.size() == cols - r.rank);
    for (const auto& v : kernel) {
      REQUIRE(v.size() == cols);
      bool nonzero = false;
      for (std::size_t i = 0; i < rows; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc == 0);
      }
      for (const Int& e : v) nonzero = nonzero || e != 0;
      CHECK(nonzero);
    }
  }
}

TEST_CASE("integer image membership") {
  // im [[2]] = 2Z.
  IntMatrix two = dense(1, 1, {2});
  CHECK(in_integer_image(two, {Int(4)}));
  CHECK_FALSE(in_integer_image(two, {Int(1)}));

  // im [[2,0],[0,3]] = 2Z x 3Z.
  IntMatrix d = dense(2, 2, {2, 0, 0, 3});
  CHECK(in_integer_image(d, {Int(2), Int(-3)}));
  CHECK_FALSE(in_integer_image(d, {Int(2), Int(1)}));

  // Any actual column combination is in the image; adding a vector outside
  // the column span is not.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 2 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, rows, cols, 6);
    std::vector<Int> z(rows, 0);
    for (std::size_t j = 0; j < cols; ++j) {
      long long c = static_cast<long long>(rng() % 7) - 3;
      for (std::size_t i = 0; i < rows; ++i) z[i] += m.at(i, j) * c;
    }
    CHECK(in_integer_image(m, z));
  }
}

}  // TEST_SUITE("snf")
