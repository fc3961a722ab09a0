#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdhom {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// parse_error -> 2, too_large (including budget_exceeded) -> 3.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition on user-supplied data failed (bad modulus, non-monic
// polynomial, subcomplex not contained in its carrier, ...).
struct invalid_parameter : error {
  using error::error;
};

// A construction would exceed a configured size cap.
struct too_large : error {
  using error::error;
};

// Face enumeration hit the configured face budget. Callers that run corpora
// catch this and record the instance as skipped instead of aborting.
struct budget_exceeded : too_large {
  explicit budget_exceeded(std::size_t budget)
      : too_large("face budget of " + std::to_string(budget) + " faces exceeded"),
        budget(budget) {}
  std::size_t budget;
};

// Ring-spec syntax error; offset is a byte offset into the input text.
struct parse_error : error {
  parse_error(const std::string& msg, std::size_t offset)
      : error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

struct io_error : error {
  using error::error;
};

}  // namespace zdhom
