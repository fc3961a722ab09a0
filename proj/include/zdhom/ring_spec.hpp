#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zdhom/ring.hpp"

namespace zdhom {

// Parsed form of a textual ring description such as
//   "Z12", "GF(3^2)", "F2[x]/(x^3 + x + 1)", "F2[x,y]/(x^2, y^2)",
// or a product of such terms joined by " x ".
struct RingSpec {
  struct Term {
    enum class Kind { ZMod, GaloisField, UnivariateQuotient, MonomialQuotient };
    Kind kind = Kind::ZMod;
    unsigned long n = 0;               // ZMod modulus
    unsigned p = 0;                    // characteristic for the other kinds
    unsigned k = 0;                    // GaloisField extension degree
    std::vector<unsigned> poly;        // UnivariateQuotient: ascending coefficients
    unsigned nvars = 0;                // MonomialQuotient: number of variables
    std::vector<std::vector<unsigned>> gens;  // MonomialQuotient: exponent vectors

    bool operator==(const Term&) const = default;
  };
  std::vector<Term> factors;  // at least one

  bool operator==(const RingSpec&) const = default;
};

// Throws parse_error (with a byte offset) on malformed input. Whitespace
// around tokens is ignored; the product separator is the letter x surrounded
// by whitespace.
RingSpec parse_ring_spec(std::string_view text);

// Canonical textual form; parse_ring_spec(normalize(s)) == s for any valid s.
std::string normalize(const RingSpec& spec);

// Instantiates the spec as an explicit ring (a product ring when there is
// more than one factor). Size violations surface as too_large.
Ring build_ring(const RingSpec& spec, std::size_t cap = kDefaultOrderCap);

}  // namespace zdhom
