#pragma once

#include <stdexcept>
#include <string>

namespace djh {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file / unparsable spec.
struct parse_error : error {
  using error::error;
};

// Group axiom failures (closure, identity, inverses, associativity).
struct group_error : error {
  using error::error;
};

// Representation / irrep-set validation failures.
struct validation_error : error {
  using error::error;
};

// Independent classification routes disagree; indicates a bug, never user error.
struct consistency_error : error {
  using error::error;
};

// Out-of-scope request (moduli with three or more prime factors, unknown
// builtin irreps, orders beyond the supported range).
struct unsupported_error : error {
  using error::error;
};

// Exact integer division requested where the division is not exact.
struct divisibility_error : error {
  using error::error;
};

// Ill-conditioned numerical input (near-singular averaged Gram matrix).
struct conditioning_error : error {
  using error::error;
};

struct domain_error : error {
  using error::error;
};

}  // namespace djh
