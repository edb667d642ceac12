#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "infalg/caps.hpp"
#include "infalg/labeled.hpp"

namespace infalg {

/// A soft set in table mode: a finite parameter set A with one subset of a
/// finite universe per parameter. Parameters are kept sorted.
struct SoftSet {
  std::vector<std::string> params;
  std::map<std::string, std::set<std::string>> values;

  static SoftSet make(std::map<std::string, std::set<std::string>> values);
  bool operator==(const SoftSet&) const = default;
};

/// Extended intersection: union of the parameter sets, with the original
/// value on the symmetric difference and the intersection where both sides
/// are defined.
SoftSet soft_extended_intersection(const SoftSet& f, const SoftSet& g);

/// Restriction of the value map to a subset of the parameters.
SoftSet soft_project(const SoftSet& f, const std::vector<std::string>& sub);

std::string soft_set_name(const SoftSet& f);

/// The labeled algebra of all soft sets over a finite universe and
/// parameter set, with extended intersection, restriction and the
/// powerset-of-parameters domain lattice.
LabeledAlgebra soft_set_algebra(const std::vector<std::string>& universe,
                                const std::vector<std::string>& params, const Caps& caps = {});

/// A subset of a countably infinite universe (indexed by naturals) that is
/// either finite or cofinite, in canonical form: the stored support is the
/// set itself in finite mode and the complement in cofinite mode.
class FiniteOrCofinite {
public:
  static FiniteOrCofinite finite(std::set<std::uint64_t> members);
  static FiniteOrCofinite cofinite_excluding(std::set<std::uint64_t> excluded);
  static FiniteOrCofinite universe() { return cofinite_excluding({}); }

  bool is_finite() const { return finite_; }
  bool is_cofinite() const { return !finite_; }
  const std::set<std::uint64_t>& support() const { return support_; }

  bool contains(std::uint64_t v) const;
  FiniteOrCofinite intersect(const FiniteOrCofinite& other) const;
  bool subset_of(const FiniteOrCofinite& other) const;
  bool operator==(const FiniteOrCofinite&) const = default;
  std::string str() const;

private:
  bool finite_ = true;
  std::set<std::uint64_t> support_;  // members when finite, complement when cofinite
};

/// A soft set over the countable universe with finite-or-cofinite values.
struct CofiniteSoftSet {
  std::vector<std::string> params;
  std::map<std::string, FiniteOrCofinite> values;

  static CofiniteSoftSet make(std::map<std::string, FiniteOrCofinite> values);
  bool operator==(const CofiniteSoftSet&) const = default;
};

/// Analytic-mode soft-set algebra: the universe is countably infinite, so
/// membership, order, combination and the finite-element characterization
/// are evaluated on canonical representations. Directed suprema are
/// supported for finitely generated families only.
class CofiniteSoftAlgebra {
public:
  explicit CofiniteSoftAlgebra(std::vector<std::string> param_universe);

  const std::vector<std::string>& params() const { return params_; }

  /// Order induced by extended intersection: larger label, smaller values.
  bool leq(const CofiniteSoftSet& a, const CofiniteSoftSet& b) const;
  CofiniteSoftSet combine(const CofiniteSoftSet& a, const CofiniteSoftSet& b) const;
  CofiniteSoftSet project(const CofiniteSoftSet& a, const std::vector<std::string>& sub) const;
  CofiniteSoftSet neutral(const std::vector<std::string>& label) const;

  /// Closed form: way-below itself inside its slice iff every value is
  /// cofinite (all complements finite).
  bool is_finite_element(const CofiniteSoftSet& a) const;

  /// Way-below inside the slice of a's label: a below b with a a finite
  /// element.
  bool way_below_local(const CofiniteSoftSet& a, const CofiniteSoftSet& b) const;

  /// Sampled counterpart of is_finite_element: builds the exhausting
  /// directed family whose members exclude growing finite prefixes of each
  /// value's complement, and asks whether some member at the given depth
  /// already dominates a. Agrees with the closed form once depth reaches
  /// the largest complement; stays false at every depth when some
  /// complement is infinite.
  bool finite_element_probe(const CofiniteSoftSet& a, std::uint64_t depth) const;

  /// Supremum of a finitely generated directed family (all members share a
  /// label): value-wise intersection. Throws contract_error when the family
  /// is empty, has mixed labels, or is not directed.
  CofiniteSoftSet directed_sup(const std::vector<CofiniteSoftSet>& family) const;

  /// Closed-form supremum of {finite elements below a}: equals a itself
  /// (the witnesses' values are exactly the cofinite supersets of each
  /// value, and their intersection is the value).
  CofiniteSoftSet density_sup(const CofiniteSoftSet& a) const;

  /// Partial supremum of the finite-element witnesses generated up to the
  /// given complement depth; increases toward a and reaches it exactly when
  /// a is a finite element.
  CofiniteSoftSet density_partial_sup(const CofiniteSoftSet& a, std::uint64_t depth) const;

  /// Classification of the labeled algebra with the finite elements as the
  /// per-domain bases, from the closed forms above.
  LabeledContinuityReport labeled_report() const;

private:
  void check_label(const CofiniteSoftSet& a) const;
  std::vector<std::string> params_;
};

}  // namespace infalg
