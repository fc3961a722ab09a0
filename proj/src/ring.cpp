#include "zdhom/ring.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace zdhom {
namespace {

// Dense tables need order^2 entries; past this point they simply do not fit,
// independently of any configurable cap.
constexpr std::size_t kTableCeiling = 2048;

void check_table_ceiling(std::size_t order, const std::string& what) {
  if (order > kTableCeiling)
    throw too_large(what + " has order " + std::to_string(order) +
                    ", beyond the dense-table ceiling of " + std::to_string(kTableCeiling));
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ----- univariate polynomial arithmetic over F_p (coefficients ascending) --

using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  a = trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    unsigned c = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      unsigned sub = (c * b[i]) % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    a = trim(a);
  }
  return a;
}

bool poly_irreducible(const Poly& f, unsigned p) {
  const std::size_t d = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::size_t dd = 1; dd * 2 <= d; ++dd) {
    unsigned long count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (unsigned long m = 0; m < count; ++m) {
      Poly g(dd + 1, 0);
      unsigned long t = m;
      for (std::size_t i = 0; i < dd; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[dd] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::string format_coefficient_monomial(unsigned coeff, const std::string& mono) {
  if (mono.empty()) return std::to_string(coeff);
  if (coeff == 1) return mono;
  return std::to_string(coeff) + mono;
}

std::string univariate_label(const Poly& a) {
  if (a.empty()) return "0";
  std::string s;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    std::string mono;
    if (i == 1) mono = "x";
    else if (i > 1) mono = "x^" + std::to_string(i);
    if (!s.empty()) s += "+";
    s += format_coefficient_monomial(a[i], mono);
  }
  return s;
}

std::string poly_spec_string(const Poly& f) {
  // Spaced form used in ring names, e.g. "x^3 + x + 1".
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    std::string mono;
    if (i == 1) mono = "x";
    else if (i > 1) mono = "x^" + std::to_string(i);
    if (!s.empty()) s += " + ";
    s += format_coefficient_monomial(f[i], mono);
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> variable_names(unsigned nvars) {
  if (nvars <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return std::vector<std::string>(names, names + nvars);
  }
  std::vector<std::string> v;
  for (unsigned i = 1; i <= nvars; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::string monomial_string(const std::vector<unsigned>& expo,
                            const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < expo.size(); ++i) {
    if (expo[i] == 0) continue;
    s += vars[i];
    if (expo[i] >= 2) s += "^" + std::to_string(expo[i]);
  }
  return s;  // empty for the constant monomial
}

bool dominates(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

uint16_t Ring::neg(uint16_t a) const {
  for (std::size_t b = 0; b < order; ++b)
    if (add(a, static_cast<uint16_t>(b)) == zero) return static_cast<uint16_t>(b);
  throw invalid_parameter("element " + std::to_string(a) + " has no additive inverse");
}

bool Ring::is_unit(uint16_t a) const {
  for (std::size_t b = 0; b < order; ++b)
    if (mul(a, static_cast<uint16_t>(b)) == one) return true;
  return false;
}

uint16_t Ring::element_by_label(const std::string& label) const {
  for (std::size_t i = 0; i < order; ++i)
    if (labels[i] == label) return static_cast<uint16_t>(i);
  throw invalid_parameter("no element labeled '" + label + "' in " + name);
}

Ring make_zmod(unsigned long n) {
  if (n < 2) throw invalid_parameter("Z n needs n >= 2, got " + std::to_string(n));
  check_table_ceiling(n, "Z" + std::to_string(n));
  Ring r;
  r.order = n;
  r.add_table.resize(n * n);
  r.mul_table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      r.add_table[a * n + b] = static_cast<uint16_t>((a + b) % n);
      r.mul_table[a * n + b] = static_cast<uint16_t>((a * b) % n);
    }
  r.zero = 0;
  r.one = 1;
  r.labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) r.labels.push_back(std::to_string(a));
  r.name = "Z" + std::to_string(n);
  return r;
}

Ring make_univariate_quotient(unsigned p, const std::vector<unsigned>& f_in) {
  if (!is_prime(p)) throw invalid_parameter("F p [x] needs p prime, got " + std::to_string(p));
  Poly f(f_in.begin(), f_in.end());
  for (auto& c : f) c %= p;
  f = trim(f);
  if (f.size() < 2) throw invalid_parameter("quotient polynomial must have degree >= 1");
  if (f.back() != 1) throw invalid_parameter("quotient polynomial must be monic");
  const std::size_t d = f.size() - 1;
  std::size_t order = 1;
  for (std::size_t i = 0; i < d; ++i) order *= p;
  check_table_ceiling(order, "F" + std::to_string(p) + "[x] quotient");

  auto decode = [&](std::size_t idx) {
    Poly a(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      a[i] = static_cast<unsigned>(idx % p);
      idx /= p;
    }
    return trim(a);
  };
  auto encode = [&](const Poly& a) {
    std::size_t idx = 0, w = 1;
    for (std::size_t i = 0; i < d; ++i) {
      idx += (i < a.size() ? a[i] : 0) * w;
      w *= p;
    }
    return static_cast<uint16_t>(idx);
  };

  Ring r;
  r.order = order;
  r.add_table.resize(order * order);
  r.mul_table.resize(order * order);
  std::vector<Poly> elems(order);
  for (std::size_t i = 0; i < order; ++i) elems[i] = decode(i);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      Poly s(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        unsigned ca = i < elems[a].size() ? elems[a][i] : 0;
        unsigned cb = i < elems[b].size() ? elems[b][i] : 0;
        s[i] = (ca + cb) % p;
      }
      r.add_table[a * order + b] = encode(s);
      r.mul_table[a * order + b] = encode(poly_mod(poly_mul(elems[a], elems[b], p), f, p));
    }
  r.zero = 0;
  r.one = encode({1});
  r.labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i) r.labels.push_back(univariate_label(elems[i]));
  r.name = "F" + std::to_string(p) + "[x]/(" + poly_spec_string(f) + ")";
  return r;
}

Ring make_galois_field(unsigned p, unsigned k, std::size_t cap) {
  if (!is_prime(p)) throw invalid_parameter("GF(p^k) needs p prime, got " + std::to_string(p));
  if (k < 1) throw invalid_parameter("GF(p^k) needs k >= 1");
  std::size_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > cap)
      throw too_large("GF(" + std::to_string(p) + "^" + std::to_string(k) +
                      ") exceeds the order cap of " + std::to_string(cap));
  }
  // Lexicographically least monic irreducible of degree k: enumerating the
  // non-leading coefficients as a base-p integer (high degree most
  // significant) is exactly lexicographic order on coefficient strings.
  Poly f;
  for (unsigned long m = 0;; ++m) {
    Poly g(k + 1, 0);
    unsigned long t = m;
    for (unsigned i = 0; i < k; ++i) {
      g[i] = static_cast<unsigned>(t % p);
      t /= p;
    }
    g[k] = 1;
    if (poly_irreducible(g, p)) {
      f = g;
      break;
    }
  }
  Ring r = make_univariate_quotient(p, f);
  r.name = "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
  return r;
}

Ring make_monomial_quotient(unsigned p, unsigned nvars,
                            const std::vector<std::vector<unsigned>>& gens_in) {
  if (!is_prime(p)) throw invalid_parameter("F p [...] needs p prime, got " + std::to_string(p));
  if (nvars < 1) throw invalid_parameter("monomial quotient needs at least one variable");
  if (gens_in.empty()) throw invalid_parameter("monomial quotient needs at least one generator");
  std::vector<std::vector<unsigned>> gens;
  for (const auto& g : gens_in) {
    if (g.size() != nvars)
      throw invalid_parameter("generator exponent vector has wrong length");
    bool all_zero = std::all_of(g.begin(), g.end(), [](unsigned e) { return e == 0; });
    if (all_zero) throw invalid_parameter("a generator equal to 1 makes the quotient trivial");
    gens.push_back(g);
  }
  // Minimal generators only.
  std::vector<std::vector<unsigned>> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      if (i != j && dominates(gens[i], gens[j]) && gens[i] != gens[j]) dominated = true;
    if (!dominated && std::find(minimal.begin(), minimal.end(), gens[i]) == minimal.end())
      minimal.push_back(gens[i]);
  }
  gens = minimal;

  // Finite quotient iff every variable has a pure-power generator.
  std::vector<unsigned> bound(nvars, 0);
  for (unsigned v = 0; v < nvars; ++v) {
    for (const auto& g : gens) {
      bool pure = g[v] > 0;
      for (unsigned w = 0; w < nvars && pure; ++w)
        if (w != v && g[w] > 0) pure = false;
      if (pure && (bound[v] == 0 || g[v] < bound[v])) bound[v] = g[v];
    }
    if (bound[v] == 0)
      throw invalid_parameter("monomial ideal is not cofinite: no pure power of variable " +
                              std::to_string(v + 1) + " among the generators");
  }

  auto in_ideal = [&](const std::vector<unsigned>& e) {
    for (const auto& g : gens)
      if (dominates(e, g)) return true;
    return false;
  };

  // Standard monomials below the staircase, graded order with 1 first.
  std::vector<std::vector<unsigned>> basis;
  std::vector<unsigned> e(nvars, 0);
  for (;;) {
    if (!in_ideal(e)) basis.push_back(e);
    unsigned v = 0;
    while (v < nvars) {
      if (++e[v] < bound[v]) break;
      e[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a) da += x;
    for (unsigned x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  });

  std::size_t order = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    order *= p;
    check_table_ceiling(order, "monomial quotient");
  }
  std::map<std::vector<unsigned>, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;

  const std::size_t nb = basis.size();
  auto digits = [&](std::size_t idx) {
    std::vector<unsigned> c(nb, 0);
    for (std::size_t i = 0; i < nb; ++i) {
      c[i] = static_cast<unsigned>(idx % p);
      idx /= p;
    }
    return c;
  };
  auto index_of = [&](const std::vector<unsigned>& c) {
    std::size_t idx = 0, w = 1;
    for (std::size_t i = 0; i < nb; ++i) {
      idx += c[i] * w;
      w *= p;
    }
    return static_cast<uint16_t>(idx);
  };

  // Product of two basis monomials: either lands in the ideal (-> 0) or is a
  // standard monomial again.
  std::vector<std::vector<int>> mono_prod(nb, std::vector<int>(nb, -1));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      std::vector<unsigned> s(nvars);
      for (unsigned v = 0; v < nvars; ++v) s[v] = basis[i][v] + basis[j][v];
      if (!in_ideal(s)) mono_prod[i][j] = static_cast<int>(pos.at(s));
    }

  Ring r;
  r.order = order;
  r.add_table.resize(order * order);
  r.mul_table.resize(order * order);
  std::vector<std::vector<unsigned>> coeffs(order);
  for (std::size_t i = 0; i < order; ++i) coeffs[i] = digits(i);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<unsigned> s(nb), m(nb, 0);
      for (std::size_t i = 0; i < nb; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % p;
      for (std::size_t i = 0; i < nb; ++i) {
        if (coeffs[a][i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
          if (coeffs[b][j] == 0) continue;
          int t = mono_prod[i][j];
          if (t >= 0) m[t] = (m[t] + coeffs[a][i] * coeffs[b][j]) % p;
        }
      }
      r.add_table[a * order + b] = index_of(s);
      r.mul_table[a * order + b] = index_of(m);
    }
  r.zero = 0;
  r.one = 1;  // basis[0] is the constant monomial, so 1 has index p^0 = 1

  const auto vars = variable_names(nvars);
  r.labels.reserve(order);
  for (std::size_t a = 0; a < order; ++a) {
    // Terms in descending (total degree, exponent vector) order.
    std::string s;
    for (std::size_t i = nb; i-- > 0;) {
      if (coeffs[a][i] == 0) continue;
      if (!s.empty()) s += "+";
      std::string mono = monomial_string(basis[i], vars);
      s += format_coefficient_monomial(coeffs[a][i], mono);
    }
    r.labels.push_back(s.empty() ? "0" : s);
  }
  std::string vlist, glist;
  for (unsigned v = 0; v < nvars; ++v) {
    if (v) vlist += ",";
    vlist += vars[v];
  }
  // x-heavy monomials first, so (x^2, x y, y^2) reads in the usual order
  std::vector<std::vector<unsigned>> sorted_gens = gens;
  std::sort(sorted_gens.begin(), sorted_gens.end(), std::greater<>());
  for (std::size_t i = 0; i < sorted_gens.size(); ++i) {
    if (i) glist += ", ";
    glist += monomial_string(sorted_gens[i], vars);
  }
  r.name = "F" + std::to_string(p) + "[" + vlist + "]/(" + glist + ")";
  return r;
}

Ring product(const std::vector<Ring>& factors, std::size_t cap) {
  if (factors.empty()) throw invalid_parameter("product of rings needs at least one factor");
  if (factors.size() == 1) return factors[0];
  std::size_t order = 1;
  for (const Ring& f : factors) {
    order *= f.order;
    if (order > cap)
      throw too_large("product order exceeds the cap of " + std::to_string(cap));
  }
  const std::size_t k = factors.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) stride[i] = stride[i + 1] * factors[i + 1].order;

  auto split = [&](std::size_t idx, std::vector<uint16_t>& out) {
    for (std::size_t i = 0; i < k; ++i) {
      out[i] = static_cast<uint16_t>(idx / stride[i]);
      idx %= stride[i];
    }
  };

  Ring r;
  r.order = order;
  r.add_table.resize(order * order);
  r.mul_table.resize(order * order);
  std::vector<uint16_t> ta(k), tb(k);
  for (std::size_t a = 0; a < order; ++a) {
    split(a, ta);
    for (std::size_t b = 0; b < order; ++b) {
      split(b, tb);
      std::size_t s = 0, m = 0;
      for (std::size_t i = 0; i < k; ++i) {
        s += static_cast<std::size_t>(factors[i].add(ta[i], tb[i])) * stride[i];
        m += static_cast<std::size_t>(factors[i].mul(ta[i], tb[i])) * stride[i];
      }
      r.add_table[a * order + b] = static_cast<uint16_t>(s);
      r.mul_table[a * order + b] = static_cast<uint16_t>(m);
    }
  }
  std::size_t zero = 0, one = 0;
  for (std::size_t i = 0; i < k; ++i) {
    zero += static_cast<std::size_t>(factors[i].zero) * stride[i];
    one += static_cast<std::size_t>(factors[i].one) * stride[i];
  }
  r.zero = static_cast<uint16_t>(zero);
  r.one = static_cast<uint16_t>(one);
  r.labels.reserve(order);
  std::vector<uint16_t> t(k);
  for (std::size_t a = 0; a < order; ++a) {
    split(a, t);
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += factors[i].labels[t[i]];
    }
    r.labels.push_back(s + ")");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (i) r.name += " x ";
    r.name += factors[i].name;
  }
  return r;
}

std::vector<uint16_t> units(const Ring& ring) {
  std::vector<uint16_t> u;
  for (std::size_t a = 0; a < ring.order; ++a)
    if (ring.is_unit(static_cast<uint16_t>(a))) u.push_back(static_cast<uint16_t>(a));
  return u;
}

std::vector<uint16_t> zero_divisors(const Ring& ring) {
  std::vector<uint16_t> zd;
  for (std::size_t a = 0; a < ring.order; ++a) {
    if (a == ring.zero) continue;
    for (std::size_t b = 0; b < ring.order; ++b) {
      if (b == ring.zero) continue;
      if (ring.mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b)) == ring.zero) {
        zd.push_back(static_cast<uint16_t>(a));
        break;
      }
    }
  }
  return zd;
}

namespace {

// Additive closure of a set containing zero.
std::vector<char> additive_closure(const Ring& ring, std::vector<char> in) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < ring.order; ++a) {
      if (!in[a]) continue;
      for (std::size_t b = a; b < ring.order; ++b) {
        if (!in[b]) continue;
        uint16_t s = ring.add(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
        if (!in[s]) {
          in[s] = 1;
          changed = true;
        }
      }
    }
  }
  return in;
}

std::vector<uint16_t> members(const std::vector<char>& set) {
  std::vector<uint16_t> v;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set[i]) v.push_back(static_cast<uint16_t>(i));
  return v;
}

}  // namespace

std::optional<LocalProfile> is_local(const Ring& ring) {
  std::vector<char> non_unit(ring.order, 0);
  std::size_t m_size = 0;
  for (std::size_t a = 0; a < ring.order; ++a)
    if (!ring.is_unit(static_cast<uint16_t>(a))) {
      non_unit[a] = 1;
      ++m_size;
    }
  for (std::size_t a = 0; a < ring.order; ++a) {
    if (!non_unit[a]) continue;
    for (std::size_t b = a; b < ring.order; ++b) {
      if (!non_unit[b]) continue;
      if (!non_unit[ring.add(static_cast<uint16_t>(a), static_cast<uint16_t>(b))])
        return std::nullopt;  // non-units not additively closed
    }
  }
  LocalProfile prof;
  prof.maximal_ideal = members(non_unit);
  prof.unit_count = ring.order - m_size;
  prof.is_field = (m_size == 1);

  // Iterated ideal powers m^i until zero; each power is the additive closure
  // of the pairwise products of the previous power with m. The socle layer is
  // m^{v-1}, which for a field is m^0 = R.
  auto is_zero_set = [&](const std::vector<char>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] && i != ring.zero) return false;
    return true;
  };
  std::vector<char> last(ring.order, 1);  // m^0 = R
  std::vector<char> power = non_unit;     // m^1
  unsigned v = 1;
  while (!is_zero_set(power)) {
    last = power;
    std::vector<char> next(ring.order, 0);
    next[ring.zero] = 1;
    for (std::size_t a = 0; a < ring.order; ++a) {
      if (!power[a]) continue;
      for (std::size_t b = 0; b < ring.order; ++b) {
        if (!non_unit[b]) continue;
        next[ring.mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b))] = 1;
      }
    }
    power = additive_closure(ring, next);
    ++v;
  }
  prof.nilpotency_index = v;
  prof.socle_layer = members(last);
  return prof;
}

std::vector<Ring> decompose_local(const Ring& ring) {
  std::vector<uint16_t> idem;
  for (std::size_t e = 0; e < ring.order; ++e)
    if (ring.mul(static_cast<uint16_t>(e), static_cast<uint16_t>(e)) == e)
      idem.push_back(static_cast<uint16_t>(e));

  std::vector<uint16_t> primitive;
  for (uint16_t e : idem) {
    if (e == ring.zero) continue;
    bool prim = true;
    for (uint16_t f : idem) {
      if (f == ring.zero || f == e) continue;
      if (ring.mul(e, f) == f) {  // f lies strictly below e
        prim = false;
        break;
      }
    }
    if (prim) primitive.push_back(e);
  }
  if (primitive.size() == 1 && primitive[0] == ring.one) return {ring};

  std::vector<Ring> factors;
  for (uint16_t e : primitive) {
    std::set<uint16_t> seen;
    for (std::size_t x = 0; x < ring.order; ++x)
      seen.insert(ring.mul(e, static_cast<uint16_t>(x)));
    std::vector<uint16_t> elems(seen.begin(), seen.end());
    std::vector<int> local_idx(ring.order, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) local_idx[elems[i]] = static_cast<int>(i);

    Ring f;
    f.order = elems.size();
    f.add_table.resize(f.order * f.order);
    f.mul_table.resize(f.order * f.order);
    for (std::size_t a = 0; a < f.order; ++a)
      for (std::size_t b = 0; b < f.order; ++b) {
        f.add_table[a * f.order + b] =
            static_cast<uint16_t>(local_idx[ring.add(elems[a], elems[b])]);
        f.mul_table[a * f.order + b] =
            static_cast<uint16_t>(local_idx[ring.mul(elems[a], elems[b])]);
      }
    f.zero = static_cast<uint16_t>(local_idx[ring.zero]);
    f.one = static_cast<uint16_t>(local_idx[e]);
    for (uint16_t x : elems) f.labels.push_back(ring.labels[x]);
    f.name = ring.name + "[" + ring.labels[e] + "]";
    factors.push_back(std::move(f));
  }

  std::sort(factors.begin(), factors.end(), [](const Ring& a, const Ring& b) {
    if (a.order != b.order) return a.order < b.order;
    std::size_t ua = units(a).size(), ub = units(b).size();
    bool fa = (ua == a.order - 1), fb = (ub == b.order - 1);
    if (fa != fb) return fb;  // non-fields first
    if (ua != ub) return ua < ub;
    return a.labels < b.labels;
  });
  return factors;
}

AxiomReport check_axioms(const Ring& ring, std::size_t exhaustive_cap,
                         std::size_t sample_count, uint64_t seed) {
  const std::size_t n = ring.order;
  AxiomReport rep;
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.detail = what;
    return rep;
  };
  if (ring.add_table.size() != n * n || ring.mul_table.size() != n * n ||
      ring.labels.size() != n)
    return fail("table or label sizes inconsistent with order");
  for (std::size_t i = 0; i < n * n; ++i)
    if (ring.add_table[i] >= n || ring.mul_table[i] >= n)
      return fail("table entry out of range");
  if (ring.one == ring.zero) return fail("one equals zero");
  for (std::size_t a = 0; a < n; ++a) {
    auto ua = static_cast<uint16_t>(a);
    if (ring.add(ring.zero, ua) != ua) return fail("zero is not an additive identity");
    if (ring.mul(ring.one, ua) != ua) return fail("one is not a multiplicative identity");
    bool has_neg = false;
    for (std::size_t b = 0; b < n && !has_neg; ++b)
      if (ring.add(ua, static_cast<uint16_t>(b)) == ring.zero) has_neg = true;
    if (!has_neg) return fail("element " + ring.labels[a] + " has no additive inverse");
    for (std::size_t b = a; b < n; ++b) {
      auto ub = static_cast<uint16_t>(b);
      if (ring.add(ua, ub) != ring.add(ub, ua)) return fail("addition is not commutative");
      if (ring.mul(ua, ub) != ring.mul(ub, ua)) return fail("multiplication is not commutative");
    }
  }
  auto check_triple = [&](uint16_t a, uint16_t b, uint16_t c) -> const char* {
    if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)))
      return "addition is not associative";
    if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
      return "multiplication is not associative";
    if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
      return "multiplication does not distribute over addition";
    return nullptr;
  };
  auto describe = [&](uint16_t a, uint16_t b, uint16_t c, const char* what) {
    return std::string(what) + " at (" + ring.labels[a] + ", " + ring.labels[b] + ", " +
           ring.labels[c] + ")";
  };
  if (n <= exhaustive_cap) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const char* what = check_triple(static_cast<uint16_t>(a), static_cast<uint16_t>(b),
                                          static_cast<uint16_t>(c));
          if (what)
            return fail(describe(static_cast<uint16_t>(a), static_cast<uint16_t>(b),
                                 static_cast<uint16_t>(c), what));
        }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    for (std::size_t s = 0; s < sample_count; ++s) {
      auto a = static_cast<uint16_t>(dist(rng));
      auto b = static_cast<uint16_t>(dist(rng));
      auto c = static_cast<uint16_t>(dist(rng));
      const char* what = check_triple(a, b, c);
      if (what) return fail(describe(a, b, c, what));
    }
  }
  return rep;
}

}  // namespace zdhom
