#pragma once

#include <string>
#include <utility>
#include <vector>

#include "infalg/caps.hpp"
#include "infalg/domain_free.hpp"

namespace infalg {

/// The subset algebra over a ground set {x1..xk}: combination is union,
/// focusing is the identity at both points of the two-element domain
/// lattice {1, top}, the neutral element is the empty set.
DomainFreeAlgebra powerset_algebra(int ground_size, const Caps& caps = {});

/// A generating set that is deliberately not closed under combination:
/// the empty set, all singletons, and one proper subset y. Density holds
/// (every set is the union of its singletons) while closure fails.
Basis unclosed_generating_set(const DomainFreeAlgebra& powerset, const std::string& y);

/// A pair (singleton, y) witnessing the closure failure: their combination
/// lies outside the generating set.
std::pair<std::string, std::string> closure_witness(const DomainFreeAlgebra& powerset,
                                                    const Basis& generating_set,
                                                    const std::string& y);

}  // namespace infalg
