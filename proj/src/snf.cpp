#include "zdhom/snf.hpp"

#include <algorithm>
#include <queue>

#include "zdhom/errors.hpp"

namespace zdhom {
namespace {

// ------------------------- dense Smith normal form -------------------------
//
// Classic elimination with a minimal-absolute-value pivot and on-the-fly
// divisibility enforcement, in arbitrary precision. Optionally tracks the
// unimodular transforms U (row ops) and V (column ops) with U*A*V = S.

struct DenseWork {
  std::size_t m, n;
  std::vector<std::vector<Int>> a, u, v;
  bool track;

  DenseWork(const IntMatrix& in, bool with_transforms)
      : m(in.rows), n(in.cols), track(with_transforms) {
    a.assign(m, std::vector<Int>(n));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = in.at(i, j);
    if (track) {
      u.assign(m, std::vector<Int>(m, 0));
      v.assign(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
      for (std::size_t j = 0; j < n; ++j) v[j][j] = 1;
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    a[i].swap(a[j]);
    if (track) u[i].swap(u[j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    if (track)
      for (std::size_t r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
  }
  // row i -= q * row t
  void row_sub(std::size_t i, std::size_t t, const Int& q) {
    for (std::size_t c = 0; c < n; ++c) a[i][c] -= q * a[t][c];
    if (track)
      for (std::size_t c = 0; c < m; ++c) u[i][c] -= q * u[t][c];
  }
  // col j -= q * col t
  void col_sub(std::size_t j, std::size_t t, const Int& q) {
    for (std::size_t r = 0; r < m; ++r) a[r][j] -= q * a[r][t];
    if (track)
      for (std::size_t r = 0; r < n; ++r) v[r][j] -= q * v[r][t];
  }
  void row_add(std::size_t i, std::size_t t) {
    for (std::size_t c = 0; c < n; ++c) a[i][c] += a[t][c];
    if (track)
      for (std::size_t c = 0; c < m; ++c) u[i][c] += u[t][c];
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) a[i][c] = -a[i][c];
    if (track)
      for (std::size_t c = 0; c < m; ++c) u[i][c] = -u[i][c];
  }

  std::size_t run() {
    std::size_t t = 0;
    while (t < m && t < n) {
      // Minimal-absolute-value nonzero pivot in the trailing submatrix.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          Int mag = abs(a[i][j]);
          if (!found || mag < best) {
            found = true;
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;
      row_swap(t, pi);
      col_swap(t, pj);

      for (;;) {
        bool restart = false;
        for (std::size_t i = t + 1; i < m && !restart; ++i) {
          if (a[i][t] == 0) continue;
          Int q = a[i][t] / a[t][t];
          if (q != 0) row_sub(i, t, q);
          if (a[i][t] != 0) {  // smaller remainder becomes the new pivot
            row_swap(t, i);
            restart = true;
          }
        }
        if (restart) continue;
        for (std::size_t j = t + 1; j < n && !restart; ++j) {
          if (a[t][j] == 0) continue;
          Int q = a[t][j] / a[t][t];
          if (q != 0) col_sub(j, t, q);
          if (a[t][j] != 0) {
            col_swap(t, j);
            restart = true;
          }
        }
        if (restart) continue;
        // Pivot must divide everything left; otherwise fold the offending
        // row in and re-eliminate, which shrinks the pivot.
        bool fixed = true;
        for (std::size_t i = t + 1; i < m && fixed; ++i)
          for (std::size_t j = t + 1; j < n && fixed; ++j)
            if (a[i][j] % a[t][t] != 0) {
              row_add(t, i);
              fixed = false;
            }
        if (fixed) break;
      }
      if (a[t][t] < 0) row_negate(t);
      ++t;
    }
    return t;
  }
};

// ------------------------- sparse elimination engine -----------------------
//
// Rows are sorted (column, value) vectors. Pivots are restricted to unit
// entries (every nonzero entry, for field coefficients), chosen by an
// approximate Markowitz cost through a lazy heap; eliminating a unit pivot
// contributes invariant factor 1. Whatever remains when no unit entries are
// left is handed to the dense routine above.

struct OverflowRestart {};

struct Int64Ops {
  using Value = long long;
  static bool is_unit(Value v) { return v == 1 || v == -1; }
  static Value sub_mul(Value dst, Value f, Value src) {
    Value prod, res;
    if (__builtin_mul_overflow(f, src, &prod)) throw OverflowRestart{};
    if (__builtin_sub_overflow(dst, prod, &res)) throw OverflowRestart{};
    return res;
  }
  static void normalize_pivot(std::vector<std::pair<uint32_t, Value>>& row, Value pivot) {
    if (pivot == -1)
      for (auto& [c, v] : row) v = -v;
  }
  static Int to_int(Value v) { return Int(v); }
};

struct CppIntOps {
  using Value = Int;
  static bool is_unit(const Value& v) { return v == 1 || v == -1; }
  static Value sub_mul(const Value& dst, const Value& f, const Value& src) {
    return dst - f * src;
  }
  static void normalize_pivot(std::vector<std::pair<uint32_t, Value>>& row, const Value& pivot) {
    if (pivot == -1)
      for (auto& [c, v] : row) v = -v;
  }
  static Int to_int(Value v) { return v; }
};

struct ModPOps {
  using Value = uint32_t;
  uint32_t p;
  bool is_unit(Value v) const { return v != 0; }
  Value sub_mul(Value dst, Value f, Value src) const {
    uint64_t prod = static_cast<uint64_t>(f) * src % p;
    return static_cast<Value>((dst + p - prod) % p);
  }
  void normalize_pivot(std::vector<std::pair<uint32_t, Value>>& row, Value pivot) const {
    // Scale by pivot^{p-2} = pivot^{-1} mod p.
    uint64_t inv = 1, base = pivot, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& [c, v] : row) v = static_cast<Value>(inv * v % p);
  }
};

template <class Ops>
struct SparseElim {
  using Value = typename Ops::Value;
  using Row = std::vector<std::pair<uint32_t, Value>>;

  Ops ops;
  std::size_t ncols = 0;
  std::vector<Row> rows;
  std::vector<char> row_dead, col_dead;
  std::vector<uint32_t> col_count;
  std::vector<std::vector<uint32_t>> col_rows;  // may hold stale row ids

  struct Cand {
    std::size_t cost;
    uint32_t row;
    bool operator>(const Cand& o) const { return cost > o.cost; }
  };
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  std::size_t pivots = 0;

  explicit SparseElim(Ops o) : ops(o) {}

  void init(std::vector<Row> in, std::size_t cols) {
    ncols = cols;
    rows = std::move(in);
    row_dead.assign(rows.size(), 0);
    col_dead.assign(ncols, 0);
    col_count.assign(ncols, 0);
    col_rows.assign(ncols, {});
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) {
        ++col_count[c];
        col_rows[c].push_back(static_cast<uint32_t>(r));
      }
    for (std::size_t r = 0; r < rows.size(); ++r) push_candidate(static_cast<uint32_t>(r));
  }

  // Best unit entry of a row by Markowitz cost (fill bound).
  bool best_pivot(uint32_t r, std::size_t& cost, uint32_t& col) const {
    bool found = false;
    for (const auto& [c, v] : rows[r]) {
      if (col_dead[c] || !ops.is_unit(v)) continue;
      std::size_t k = (rows[r].size() - 1) * (col_count[c] - 1);
      if (!found || k < cost) {
        found = true;
        cost = k;
        col = c;
      }
    }
    return found;
  }

  void push_candidate(uint32_t r) {
    if (row_dead[r]) return;
    std::size_t cost = 0;
    uint32_t col = 0;
    if (best_pivot(r, cost, col)) heap.push({cost, r});
  }

  Value* entry_at(uint32_t r, uint32_t c) {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, uint32_t cc) { return e.first < cc; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  }

  // dst -= f * src, merging sorted rows; maintains column counts/index.
  void combine(uint32_t dst_id, const Row& src, const Value& f) {
    Row& dst = rows[dst_id];
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        out.push_back(dst[i++]);
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        Value nv = ops.sub_mul(Value{}, f, src[j].second);
        if (!(nv == Value{})) {
          out.push_back({src[j].first, nv});
          ++col_count[src[j].first];
          col_rows[src[j].first].push_back(dst_id);
        }
        ++j;
      } else {
        Value nv = ops.sub_mul(dst[i].second, f, src[j].second);
        if (nv == Value{}) {
          --col_count[dst[i].first];
        } else {
          out.push_back({dst[i].first, nv});
        }
        ++i;
        ++j;
      }
    }
    dst = std::move(out);
  }

  void eliminate(uint32_t pr, uint32_t pc) {
    Value pivot = *entry_at(pr, pc);
    ops.normalize_pivot(rows[pr], pivot);
    const Row src = rows[pr];  // snapshot; combine() may touch col_rows
    std::vector<uint32_t> victims = col_rows[pc];
    for (uint32_t r : victims) {
      if (r == pr || row_dead[r]) continue;
      Value* e = entry_at(r, pc);
      if (!e) continue;  // stale index entry
      combine(r, src, *e);
      push_candidate(r);
    }
    // Retire the pivot row and column.
    for (const auto& [c, v] : rows[pr]) --col_count[c];
    row_dead[pr] = 1;
    col_dead[pc] = 1;
    rows[pr].clear();
    rows[pr].shrink_to_fit();
    col_rows[pc].clear();
    col_rows[pc].shrink_to_fit();
    ++pivots;
  }

  void run() {
    while (!heap.empty()) {
      Cand top = heap.top();
      heap.pop();
      if (row_dead[top.row]) continue;
      std::size_t cost = 0;
      uint32_t col = 0;
      if (!best_pivot(top.row, cost, col)) continue;
      if (cost > top.cost) {
        heap.push({cost, top.row});
        continue;
      }
      eliminate(top.row, col);
    }
  }

  // Live entries left after unit elimination, as a compacted dense matrix.
  IntMatrix residual() const {
    std::vector<uint32_t> live_rows, col_map(ncols, UINT32_MAX);
    std::vector<uint32_t> live_cols;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!row_dead[r] && !rows[r].empty()) live_rows.push_back(static_cast<uint32_t>(r));
    for (std::size_t c = 0; c < ncols; ++c)
      if (!col_dead[c] && col_count[c] > 0) {
        col_map[c] = static_cast<uint32_t>(live_cols.size());
        live_cols.push_back(static_cast<uint32_t>(c));
      }
    IntMatrix m(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) m.at(i, col_map[c]) = Ops::to_int(v);
    return m;
  }
};

template <class Ops>
std::vector<typename SparseElim<Ops>::Row> convert_rows(const SparseIntMatrix& m, Ops) {
  std::vector<typename SparseElim<Ops>::Row> rows(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    rows[r].reserve(m.entries[r].size());
    for (const auto& [c, v] : m.entries[r])
      if (v != 0) rows[r].push_back({c, typename Ops::Value(v)});
    std::sort(rows[r].begin(), rows[r].end());
  }
  return rows;
}

SNFResult smith_dense(const IntMatrix& m) {
  DenseWork w(m, false);
  std::size_t rank = w.run();
  SNFResult res;
  res.rank = rank;
  for (std::size_t t = 0; t < rank; ++t) res.invariant_factors.push_back(w.a[t][t]);
  return res;
}

template <class Ops>
SNFResult smith_sparse_with(const SparseIntMatrix& m, Ops ops) {
  SparseElim<Ops> elim(ops);
  elim.init(convert_rows(m, ops), m.cols);
  elim.run();
  SNFResult res;
  res.rank = elim.pivots;
  res.invariant_factors.assign(elim.pivots, Int(1));
  IntMatrix rest = elim.residual();
  if (rest.rows && rest.cols) {
    SNFResult tail = smith_dense(rest);
    res.rank += tail.rank;
    for (auto& d : tail.invariant_factors) res.invariant_factors.push_back(std::move(d));
  }
  return res;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) { return smith_dense(m); }

SNFResult smith_normal_form(const SparseIntMatrix& m) {
  try {
    return smith_sparse_with(m, Int64Ops{});
  } catch (const OverflowRestart&) {
    return smith_sparse_with(m, CppIntOps{});
  }
}

std::size_t rank_mod_p(const SparseIntMatrix& m, unsigned p) {
  if (p < 2) throw invalid_parameter("rank_mod_p needs a prime modulus");
  SparseElim<ModPOps> elim(ModPOps{p});
  std::vector<SparseElim<ModPOps>::Row> rows(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : m.entries[r]) {
      long long red = v % static_cast<long long>(p);
      if (red < 0) red += p;
      if (red) rows[r].push_back({c, static_cast<uint32_t>(red)});
    }
    std::sort(rows[r].begin(), rows[r].end());
  }
  elim.init(std::move(rows), m.cols);
  elim.run();
  return elim.pivots;
}

std::size_t rank_mod_p(const IntMatrix& m, unsigned p) {
  if (p < 2) throw invalid_parameter("rank_mod_p needs a prime modulus");
  SparseIntMatrix s;
  s.rows = m.rows;
  s.cols = m.cols;
  s.entries.resize(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) {
      Int red = m.at(r, c) % p;
      if (red < 0) red += p;
      if (red != 0) s.entries[r].push_back({static_cast<uint32_t>(c), red.convert_to<long long>()});
    }
  return rank_mod_p(s, p);
}

SNFTransforms smith_with_transforms(const IntMatrix& m) {
  DenseWork w(m, true);
  std::size_t rank = w.run();
  SNFTransforms t;
  t.rank = rank;
  t.u = IntMatrix(m.rows, m.rows);
  t.s = IntMatrix(m.rows, m.cols);
  t.v = IntMatrix(m.cols, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.rows; ++j) t.u.at(i, j) = w.u[i][j];
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.s.at(i, j) = w.a[i][j];
  for (std::size_t i = 0; i < m.cols; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.v.at(i, j) = w.v[i][j];
  return t;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m) {
  SNFTransforms t = smith_with_transforms(m);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = t.rank; j < m.cols; ++j) {
    std::vector<Int> col(m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) col[i] = t.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

bool in_integer_image(const IntMatrix& m, const std::vector<Int>& z) {
  if (z.size() != m.rows) throw invalid_parameter("vector length does not match matrix rows");
  SNFTransforms t = smith_with_transforms(m);
  // m x = z  <=>  s y = u z with x = v y.
  for (std::size_t i = 0; i < m.rows; ++i) {
    Int w = 0;
    for (std::size_t j = 0; j < m.rows; ++j) w += t.u.at(i, j) * z[j];
    if (i < t.rank) {
      if (w % t.s.at(i, i) != 0) return false;
    } else {
      if (w != 0) return false;
    }
  }
  return true;
}

}  // namespace zdhom
