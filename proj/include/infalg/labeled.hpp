#pragma once

#include <map>
#include <string>
#include <vector>

#include "infalg/caps.hpp"
#include "infalg/domain_free.hpp"
#include "infalg/order.hpp"

namespace infalg {

/// A finite labeled information algebra: every element carries a domain
/// label, marginalization is partial (defined exactly when the target is
/// below the label) and each domain has its own neutral element.
struct LabeledAlgebra {
  std::vector<std::string> carrier;
  FiniteLattice lattice;
  std::vector<int> label;                           // carrier -> lattice index
  std::vector<std::vector<int>> combine_table;      // carrier x carrier
  std::vector<std::vector<int>> marginalize_table;  // carrier x lattice, -1 = undefined
  std::vector<int> neutrals;                        // lattice index -> carrier index

  LabeledAlgebra() = default;
  LabeledAlgebra(std::vector<std::string> carrier_, FiniteLattice lattice_,
                 std::vector<int> label_, std::vector<std::vector<int>> combine,
                 std::vector<std::vector<int>> marginalize, std::vector<int> neutrals_);

  std::size_t size() const { return carrier.size(); }
  const std::string& name(int i) const { return carrier.at(static_cast<std::size_t>(i)); }
  int index(std::string_view id) const;

  int domain_of(int p) const { return label[static_cast<std::size_t>(p)]; }
  int combine(int a, int b) const { return combine_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  bool can_marginalize(int p, int x) const { return lattice.le(x, domain_of(p)); }
  /// contract_error when x is not below the label of p.
  int marginalize(int p, int x) const;
  int neutral_of(int x) const { return neutrals[static_cast<std::size_t>(x)]; }

  std::vector<int> slice(int x) const;  // indices with label x, in carrier order
};

struct LabeledAxiomReport {
  AxiomCheck semigroup, labeling, marginalization, transitivity, combination, stability,
      idempotency;
  bool all_pass() const {
    return semigroup.pass && labeling.pass && marginalization.pass && transitivity.pass &&
           combination.pass && stability.pass && idempotency.pass;
  }
  std::vector<std::pair<std::string, AxiomCheck>> entries() const {
    return {{"semigroup", semigroup},       {"labeling", labeling},
            {"marginalization", marginalization}, {"transitivity", transitivity},
            {"combination", combination},   {"stability", stability},
            {"idempotency", idempotency}};
  }
};

/// Checks the seven labeled axioms. The marginalization entry also covers
/// the totality boundary: the table must be defined exactly where the
/// target domain is below the label.
LabeledAxiomReport check_labeled_axioms(const LabeledAlgebra& a);

/// phi combined with the neutral of y; requires y >= label(phi).
int vacuous_extension(const LabeledAlgebra& a, int phi, int y);
std::string vacuous_extension(const LabeledAlgebra& a, std::string_view phi, std::string_view y);

/// The slice of elements labeled x under the induced order, together with
/// the mapping back to global carrier indices.
struct LocalPoset {
  Poset poset;
  std::vector<int> global;  // local index -> carrier index
  int local_of(int global_index) const;
};
LocalPoset local_poset(const LabeledAlgebra& a, int x);

/// One candidate basis per domain; members must carry the domain's label.
struct LocalBasisFamily {
  std::map<std::string, std::vector<std::string>> members;  // domain name -> element names
};

LocalBasisFamily full_local_family(const LabeledAlgebra& a);
/// Per-domain finite elements (way-below themselves inside the slice).
LocalBasisFamily finite_local_family(const LabeledAlgebra& a, const Caps& caps = {});

struct LabeledDomainReport {
  std::string domain;
  bool family_ok = false;  // subset of the slice, neutral present, closed
  bool convergency = false;
  bool density = false;
  bool strong_density = false;
  bool compactness = false;
};

struct LabeledContinuityReport {
  bool continuous = false;
  bool s_continuous = false;
  bool compact = false;
  bool s_compact = false;
  std::vector<LabeledDomainReport> per_domain;
  std::map<std::string, std::vector<std::string>> finite_elements;  // per domain
  std::vector<std::pair<std::string, std::string>> witness_failures;
  bool implications_hold() const {
    if (s_compact && !(compact && s_continuous)) return false;
    if (compact && !continuous) return false;
    if (s_continuous && !continuous) return false;
    return true;
  }
};

/// Evaluates convergency, density, strong density and compactness per
/// domain against the supplied family. Strong density uses the witness set
/// {chi in G_x : chi extended to the top domain lies in G_top, chi
/// way-below phi inside the slice}.
LabeledContinuityReport check_labeled_continuity(const LabeledAlgebra& a,
                                                 const LocalBasisFamily& family,
                                                 const Caps& caps = {});

/// For a family certifying compactness: members are exactly the slice-local
/// finite elements, and on members way-below coincides with the order.
bool check_compact_basis_laws(const LabeledAlgebra& a, const LocalBasisFamily& family,
                              const Caps& caps = {});

}  // namespace infalg
