#pragma once

#include <cstddef>

namespace infalg {

// Resource caps for exhaustive checks. Subset enumeration costs 2^n, so
// posets larger than max_enum_elements refuse to enumerate instead of
// silently sampling. max_carrier bounds any table we materialize.
struct Caps {
  std::size_t max_enum_elements = 12;
  std::size_t max_carrier = 4096;
};

}  // namespace infalg
