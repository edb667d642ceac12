#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "infalg/caps.hpp"
#include "infalg/errors.hpp"

namespace infalg {

/// A finite partially ordered set over opaque string identifiers.
/// The order is stored as an explicit relation; it is never derived from
/// identifier text.
class Poset {
public:
  Poset() = default;

  /// Builds from generator pairs (a,b) meaning a <= b. The reflexive and
  /// transitive closure is taken; a cycle between distinct elements is an
  /// antisymmetry violation and raises malformed_error.
  Poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  /// Builds from a full relation matrix, validating reflexivity,
  /// antisymmetry and transitivity exhaustively.
  static Poset from_leq_matrix(std::vector<std::string> elements,
                               std::vector<std::vector<bool>> leq);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(int i) const { return elements_.at(static_cast<std::size_t>(i)); }

  int index(std::string_view id) const;          // malformed_error on unknown id
  int find(std::string_view id) const noexcept;  // -1 on unknown id

  bool le(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  bool le(std::string_view a, std::string_view b) const { return le(index(a), index(b)); }

  std::optional<int> bottom() const;
  std::optional<int> top() const;

private:
  void build_index();
  void validate() const;

  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
  std::unordered_map<std::string, int> index_;
};

/// A nonempty subset validated to be directed in its parent poset.
class DirectedSubset {
public:
  DirectedSubset(const Poset& parent, std::vector<int> members);
  const std::vector<int>& members() const { return members_; }
  const Poset& parent() const { return *parent_; }

private:
  const Poset* parent_;
  std::vector<int> members_;
};

/// True iff S is nonempty and every pair of members has an upper bound
/// inside S. The empty set is not directed.
bool is_directed(const Poset& p, const std::vector<int>& members);
bool is_directed(const Poset& p, const std::vector<std::string>& members);

/// Least upper bound of S if it exists. lub({}) is the bottom element when
/// the poset has one, absent otherwise.
std::optional<int> lub(const Poset& p, const std::vector<int>& members);
std::optional<std::string> lub(const Poset& p, const std::vector<std::string>& members);

/// All directed subsets of a poset, as bitmasks, with their lubs. This is
/// the brute-force oracle behind way_below and the lattice classifiers.
/// Requires p.size() <= caps.max_enum_elements (<= 30).
class DirectedFamily {
public:
  static DirectedFamily enumerate(const Poset& p, const Caps& caps = {});

  const Poset& poset() const { return *poset_; }
  const std::vector<std::uint32_t>& masks() const { return masks_; }
  /// lub of masks()[k], or -1 when no lub exists.
  const std::vector<int>& lubs() const { return lubs_; }

  /// a way-below b: every directed X with b <= lub(X) contains c >= a.
  bool way_below(int a, int b) const;
  std::vector<int> finite_elements() const;  // {a : a way-below a}

private:
  const Poset* poset_ = nullptr;
  std::vector<std::uint32_t> masks_;
  std::vector<int> lubs_;
  std::vector<std::uint32_t> up_;  // up_[i] = mask of elements >= i
};

bool way_below(const Poset& p, int a, int b, const Caps& caps = {});
bool way_below(const Poset& p, std::string_view a, std::string_view b, const Caps& caps = {});

/// Every subset (including {}) has a least upper bound.
bool is_complete_lattice(const Poset& p, const Caps& caps = {});

/// Pairwise joins exist, a bottom exists, and every directed subset has a
/// lub. Agrees with is_complete_lattice on finite posets.
bool complete_via_directed(const Poset& p, const Caps& caps = {});

/// Complete and every a equals the lub of {b : b way-below a}.
bool is_continuous_lattice(const Poset& p, const Caps& caps = {});

/// Complete and every a equals the lub of {b : b way-below b, b <= a}.
bool is_algebraic_lattice(const Poset& p, const Caps& caps = {});

/// A finite lattice: total join/meet tables over an underlying poset.
/// join(a,b) is validated to be the least upper bound of {a,b}; dually for
/// meet. Construction fails if some pair has no join or no meet.
class FiniteLattice {
public:
  FiniteLattice() = default;

  static FiniteLattice from_poset(Poset p);

  /// Validates externally supplied tables against the poset.
  static FiniteLattice from_tables(Poset p,
                                   std::vector<std::vector<int>> join,
                                   std::vector<std::vector<int>> meet);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& name(int i) const { return poset_.name(i); }
  int index(std::string_view id) const { return poset_.index(id); }
  bool le(int a, int b) const { return poset_.le(a, b); }

  int join(int a, int b) const { return join_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  const std::vector<std::vector<int>>& join_table() const { return join_; }
  const std::vector<std::vector<int>>& meet_table() const { return meet_; }

  int top() const { return top_; }
  int bottom() const { return bottom_; }

private:
  Poset poset_;
  std::vector<std::vector<int>> join_, meet_;
  int top_ = -1, bottom_ = -1;
};

/// Componentwise product; elements are named "(a,b)". The product of two
/// lattices with tops has top (top_D, top_E).
FiniteLattice product_lattice(const FiniteLattice& d, const FiniteLattice& e);

/// Convenience builders used across instances and tests.
FiniteLattice chain_lattice(int n, const std::string& prefix = "c");
FiniteLattice powerset_lattice(const std::vector<std::string>& ground);
std::string set_name(const std::vector<std::string>& members);  // "{a,b}" canonical

}  // namespace infalg
