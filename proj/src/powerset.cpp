#include "infalg/instances/powerset.hpp"

#include <algorithm>
#include <bit>

namespace infalg {

DomainFreeAlgebra powerset_algebra(int ground_size, const Caps& caps) {
  if (ground_size < 0 || ground_size > 16)
    throw malformed_error("ground set size must be between 0 and 16");
  const std::uint32_t total = 1u << ground_size;
  if (total > caps.max_carrier)
    throw resource_limit_error("powerset carrier of size " + std::to_string(total) +
                               " exceeds the carrier cap");

  std::vector<std::string> ground;
  for (int i = 1; i <= ground_size; ++i) ground.push_back("x" + std::to_string(i));

  std::vector<std::string> carrier;
  carrier.reserve(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::string> members;
    for (std::uint32_t b = mask; b; b &= b - 1)
      members.push_back(ground[static_cast<std::size_t>(std::countr_zero(b))]);
    carrier.push_back(set_name(members));
  }

  const std::vector<std::string> names = {"1", "top"};
  const std::vector<std::pair<std::string, std::string>> pairs = {{"1", "top"}};
  FiniteLattice d = FiniteLattice::from_poset(Poset(names, pairs));

  std::vector<std::vector<int>> combine(total, std::vector<int>(total));
  for (std::uint32_t a = 0; a < total; ++a)
    for (std::uint32_t b = 0; b < total; ++b)
      combine[a][b] = static_cast<int>(a | b);
  std::vector<std::vector<int>> focus(total, std::vector<int>(d.size()));
  for (std::uint32_t a = 0; a < total; ++a)
    for (std::size_t x = 0; x < d.size(); ++x) focus[a][x] = static_cast<int>(a);

  return DomainFreeAlgebra(std::move(carrier), std::move(d), std::move(combine),
                           std::move(focus), 0);
}

Basis unclosed_generating_set(const DomainFreeAlgebra& powerset, const std::string& y) {
  const int yi = powerset.index(y);
  const int full = static_cast<int>(powerset.size()) - 1;
  if (yi == full || yi == powerset.neutral)
    throw malformed_error("y must be a nonempty proper subset of the ground set");

  Basis basis;
  basis.members.push_back(powerset.name(powerset.neutral));
  for (std::uint32_t mask = 1; mask < powerset.size(); ++mask)
    if (std::popcount(mask) == 1) basis.members.push_back(powerset.name(static_cast<int>(mask)));
  if (std::find(basis.members.begin(), basis.members.end(), y) == basis.members.end())
    basis.members.push_back(y);
  basis.closed_under_combination = false;
  return basis;
}

std::pair<std::string, std::string> closure_witness(const DomainFreeAlgebra& powerset,
                                                    const Basis& generating_set,
                                                    const std::string& y) {
  const std::uint32_t ymask = static_cast<std::uint32_t>(powerset.index(y));
  for (std::uint32_t s = 1; s < powerset.size(); ++s) {
    if (std::popcount(s) != 1 || (s & ymask) != 0) continue;
    const std::string combined = powerset.name(powerset.combine(static_cast<int>(s), static_cast<int>(ymask)));
    if (std::find(generating_set.members.begin(), generating_set.members.end(), combined) ==
        generating_set.members.end())
      return {powerset.name(static_cast<int>(s)), y};
  }
  throw malformed_error("no closure witness: y is not a proper subset avoiding a singleton");
}

}  // namespace infalg
