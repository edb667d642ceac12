#pragma once

#include <stdexcept>
#include <string>

namespace infalg {

// Input data violates a structural invariant (bad tables, unknown ids, broken order).
class malformed_error : public std::runtime_error {
public:
  explicit malformed_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive check would exceed a configured cap; never approximated silently.
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated precondition.
class contract_error : public std::runtime_error {
public:
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace infalg
