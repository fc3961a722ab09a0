#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace zdhom {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix in row-major order.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;  // rows * cols entries

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Sparse integer matrix with machine-word entries, kept as per-row sorted
// (column, value) lists. This is the working format for boundary matrices.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<uint32_t, long long>>> entries;
};

struct SNFResult {
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // the rank positive diagonal entries, each dividing the next
};

// Smith normal form over the integers, exact and arbitrary-precision. The
// sparse overload eliminates unit pivots in machine words first (restarting
// in big integers if an intermediate value would overflow) and finishes the
// small residual densely.
SNFResult smith_normal_form(const IntMatrix& m);
SNFResult smith_normal_form(const SparseIntMatrix& m);

// Rank of m over the prime field F_p.
std::size_t rank_mod_p(const IntMatrix& m, unsigned p);
std::size_t rank_mod_p(const SparseIntMatrix& m, unsigned p);

// Whether z (length m.rows) lies in the integer column span of m.
bool in_integer_image(const IntMatrix& m, const std::vector<Int>& z);

// Dense SNF with transforms: returns U, S, V with U * m * V = S, S in Smith
// form. Meant for small matrices (kernel extraction); quadratic memory.
struct SNFTransforms {
  IntMatrix u, s, v;
  std::size_t rank = 0;
};
SNFTransforms smith_with_transforms(const IntMatrix& m);

// Basis of the integer kernel of m, as columns gathered from the transform V.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m);

}  // namespace zdhom
