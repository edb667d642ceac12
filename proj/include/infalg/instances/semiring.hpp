#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infalg/caps.hpp"
#include "infalg/labeled.hpp"

namespace infalg {

/// A commutative semiring given by value tables. Construction validates the
/// semiring laws exhaustively: both operations commutative and associative,
/// times distributes over plus, zero is the plus-unit and times-absorbing,
/// one is the times-unit.
struct SemiringSpec {
  std::vector<std::string> values;
  std::vector<std::vector<int>> plus_table, times_table;
  int zero = -1, one = -1;

  SemiringSpec() = default;
  SemiringSpec(std::vector<std::string> values_, std::vector<std::vector<int>> plus,
               std::vector<std::vector<int>> times, int zero_, int one_);

  std::size_t size() const { return values.size(); }
  const std::string& name(int i) const { return values.at(static_cast<std::size_t>(i)); }
  int index(std::string_view id) const;
  int plus(int a, int b) const { return plus_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int times(int a, int b) const { return times_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
};

struct SemiringGates {
  bool is_c_semiring = false;   // a + 1 = 1 for all a
  bool has_absorption = false;  // a * (a + b) = a for all a, b
};

/// Evaluates both gate predicates exhaustively. Absorption implies the
/// c-semiring gate and idempotent times; tests assert that implication.
SemiringGates semiring_gates(const SemiringSpec& s);

SemiringSpec boolean_semiring();
SemiringSpec fuzzy_semiring();            // {0, 1/2, 1} with max / min
SemiringSpec truncated_minplus_semiring();  // {0, 1, inf}: plus = min, times = capped sum

/// A tuple-valued constraint: an ordered scope of variables (sorted by the
/// global lexicographic variable order) and one semiring value per tuple of
/// the shared variable domain, row-major with the last scope variable
/// varying fastest.
struct Constraint {
  std::vector<std::string> scope;
  std::vector<int> table;  // size = domain_size ^ scope.size()
};

/// Selects the positions of sub (which must be a subset of scope) from a
/// tuple over scope, preserving the global variable order.
std::vector<int> tuple_project(const std::vector<int>& tuple,
                               const std::vector<std::string>& scope,
                               const std::vector<std::string>& sub);

Constraint constraint_combine(const Constraint& c1, const Constraint& c2, const SemiringSpec& s,
                              int domain_size);

/// Sums (in the semiring) over all tuples projecting onto each target
/// tuple. The target scope must be contained in the constraint's scope.
Constraint constraint_project(const Constraint& c, const std::vector<std::string>& sub,
                              const SemiringSpec& s, int domain_size);

std::string constraint_name(const Constraint& c, const SemiringSpec& s);

/// The labeled algebra of all constraints over the given variables and a
/// shared domain of the given size, with combination, projection and the
/// powerset-of-variables domain lattice. The carrier has
/// sum over scopes of |S|^(domain_size^|scope|) elements; the cap guards it.
LabeledAlgebra constraint_algebra(const SemiringSpec& s, const std::vector<std::string>& vars,
                                  int domain_size, const Caps& caps = {});

/// Named semirings plus generated families (bounded chains, capped
/// tropical, saturating arithmetic, products, exhaustively filtered random
/// two-element tables); at least `count` entries, deterministic in seed.
std::vector<SemiringSpec> semiring_corpus(int count, std::uint64_t seed);

}  // namespace infalg
