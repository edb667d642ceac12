#pragma once

#include <string>
#include <utility>
#include <vector>

#include "infalg/caps.hpp"
#include "infalg/order.hpp"

namespace infalg {

/// A finite domain-free information algebra given by tables: a carrier with
/// a total combination table, a total focusing table over a domain lattice,
/// and a neutral element. Construction validates shapes only; the axioms
/// are checked by check_df_axioms.
struct DomainFreeAlgebra {
  std::vector<std::string> carrier;
  FiniteLattice lattice;
  std::vector<std::vector<int>> combine_table;  // carrier x carrier -> carrier index
  std::vector<std::vector<int>> focus_table;    // carrier x lattice -> carrier index
  int neutral = -1;

  DomainFreeAlgebra() = default;
  DomainFreeAlgebra(std::vector<std::string> carrier_, FiniteLattice lattice_,
                    std::vector<std::vector<int>> combine, std::vector<std::vector<int>> focus,
                    int neutral_);

  std::size_t size() const { return carrier.size(); }
  const std::string& name(int i) const { return carrier.at(static_cast<std::size_t>(i)); }
  int index(std::string_view id) const;

  int combine(int a, int b) const { return combine_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int focus(int a, int x) const { return focus_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)]; }
};

struct AxiomCheck {
  bool pass = true;
  std::string counterexample;  // empty when pass; first failure in carrier order
};

struct DfAxiomReport {
  AxiomCheck semigroup, transitivity, combination, support, idempotency;
  bool all_pass() const {
    return semigroup.pass && transitivity.pass && combination.pass && support.pass &&
           idempotency.pass;
  }
  std::vector<std::pair<std::string, AxiomCheck>> entries() const {
    return {{"semigroup", semigroup},
            {"transitivity", transitivity},
            {"combination", combination},
            {"support", support},
            {"idempotency", idempotency}};
  }
};

DfAxiomReport check_df_axioms(const DomainFreeAlgebra& a);

/// The order induced by combination: x <= y iff x (x) y = y. Fails with
/// malformed_error when the relation is not a partial order (broken axioms).
Poset induced_order(const DomainFreeAlgebra& a);

/// Exhaustively verifies the basic order facts: focusing is deflationary,
/// combination is the binary lub, and focusing is monotone in both the
/// element and the domain argument.
bool check_induced_order_laws(const DomainFreeAlgebra& a);

/// The elements way-below themselves in the induced order.
std::vector<std::string> finite_elements(const DomainFreeAlgebra& a, const Caps& caps = {});

/// A candidate basis: a subset of the carrier. closed_under_combination
/// records whether closure has been verified.
struct Basis {
  std::vector<std::string> members;
  bool closed_under_combination = false;
};

struct BasisReport {
  bool contains_neutral = false;
  bool closed = false;
  bool convergency = false;
  bool density = false;         // every phi is the sup of its way-below approximants in the basis
  bool strong_density = false;  // focused variant, per focus fixpoints
  bool compactness = false;
  bool certifies_continuous = false;
  bool certifies_s_continuous = false;
  bool certifies_compact = false;
  bool certifies_s_compact = false;
  std::vector<std::pair<std::string, std::string>> failures;  // (property, counterexample)
};

/// Evaluates the convergency / density / strong density / compactness
/// conditions for a basis and reports which strength levels it certifies.
BasisReport check_basis(const DomainFreeAlgebra& a, const Basis& basis, const Caps& caps = {});

struct DirectednessReport {
  bool plain_directed = false;  // true also when the set is empty
  bool plain_empty = false;
  bool strong_directed = false;
  bool strong_empty = false;
  bool ok() const { return plain_directed && strong_directed; }
};

/// Directedness of the approximant sets {psi in basis : psi way-below phi}
/// and {psi in basis : psi = psi focused at x, way-below phi}. Guaranteed
/// for combination-closed bases; evaluated as-is otherwise.
DirectednessReport approximant_directedness(const DomainFreeAlgebra& a, const Basis& basis,
                                            std::string_view phi, std::string_view x,
                                            const Caps& caps = {});

/// If an (unclosed) generating set satisfies convergency plus density with
/// directed approximant sets, the full carrier certifies the same strength
/// level. Returns true when the implication holds (vacuously when the
/// hypothesis fails).
bool generating_set_equivalence(const DomainFreeAlgebra& a, const Basis& upsilon,
                                const Caps& caps = {});

struct ContinuityReport {
  bool continuous = false;
  bool s_continuous = false;
  bool compact = false;
  bool s_compact = false;
  std::vector<std::string> finite_elements;
  std::vector<std::pair<std::string, std::string>> witness_failures;
  bool implications_hold() const {
    if (s_compact && !(compact && s_continuous)) return false;
    if (compact && !continuous) return false;
    if (s_continuous && !continuous) return false;
    return true;
  }
};

/// Classifies via the induced order: continuous iff the order is a
/// continuous lattice, compact iff algebraic; the strong variants add the
/// focused density equations over the whole carrier (resp. the finite
/// elements).
ContinuityReport classify(const DomainFreeAlgebra& a, const Caps& caps = {});

/// True iff focusing preserves directed sups: for every directed X and
/// every domain x, (lub X) focused at x equals the lub of the pointwise
/// focusing. Coincides with classify(a).s_continuous on continuous
/// instances.
bool focus_preserves_directed_sups(const DomainFreeAlgebra& a, const Caps& caps = {});

}  // namespace infalg
