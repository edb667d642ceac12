#include "infalg/domain_free.hpp"

#include <algorithm>
#include <bit>

namespace infalg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw malformed_error(what);
}

std::vector<int> mask_members(std::uint32_t mask) {
  std::vector<int> members;
  for (std::uint32_t b = mask; b; b &= b - 1) members.push_back(std::countr_zero(b));
  return members;
}

}  // namespace

DomainFreeAlgebra::DomainFreeAlgebra(std::vector<std::string> carrier_, FiniteLattice lattice_,
                                     std::vector<std::vector<int>> combine,
                                     std::vector<std::vector<int>> focus, int neutral_)
    : carrier(std::move(carrier_)),
      lattice(std::move(lattice_)),
      combine_table(std::move(combine)),
      focus_table(std::move(focus)),
      neutral(neutral_) {
  const std::size_t n = carrier.size();
  require(n > 0, "empty carrier");
  {
    std::vector<std::string> sorted = carrier;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "duplicate carrier identifier");
  }
  require(combine_table.size() == n, "combination table has wrong row count");
  for (const auto& row : combine_table) {
    require(row.size() == n, "combination table has wrong column count");
    for (int v : row) require(v >= 0 && v < static_cast<int>(n), "combination table entry out of range");
  }
  require(focus_table.size() == n, "focusing table has wrong row count");
  for (const auto& row : focus_table) {
    require(row.size() == lattice.size(), "focusing table has wrong column count");
    for (int v : row) require(v >= 0 && v < static_cast<int>(n), "focusing table entry out of range");
  }
  require(neutral >= 0 && neutral < static_cast<int>(n), "neutral element out of range");
}

int DomainFreeAlgebra::index(std::string_view id) const {
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (carrier[i] == id) return static_cast<int>(i);
  throw malformed_error("unknown carrier element '" + std::string(id) + "'");
}

DfAxiomReport check_df_axioms(const DomainFreeAlgebra& a) {
  DfAxiomReport report;
  const int n = static_cast<int>(a.size());
  const int nd = static_cast<int>(a.lattice.size());

  auto fail = [&](AxiomCheck& check, std::string detail) {
    if (check.pass) {
      check.pass = false;
      check.counterexample = std::move(detail);
    }
  };

  for (int p = 0; p < n && report.semigroup.pass; ++p) {
    if (a.combine(a.neutral, p) != p)
      fail(report.semigroup, "neutral: combine(" + a.name(a.neutral) + "," + a.name(p) + ")=" +
                                 a.name(a.combine(a.neutral, p)));
    for (int q = 0; q < n && report.semigroup.pass; ++q) {
      if (a.combine(p, q) != a.combine(q, p))
        fail(report.semigroup, "commutativity: (" + a.name(p) + "," + a.name(q) + ")");
      for (int r = 0; r < n && report.semigroup.pass; ++r)
        if (a.combine(a.combine(p, q), r) != a.combine(p, a.combine(q, r)))
          fail(report.semigroup,
               "associativity: (" + a.name(p) + "," + a.name(q) + "," + a.name(r) + ")");
    }
  }

  for (int p = 0; p < n && report.transitivity.pass; ++p)
    for (int x = 0; x < nd && report.transitivity.pass; ++x)
      for (int y = 0; y < nd; ++y)
        if (a.focus(a.focus(p, y), x) != a.focus(p, a.lattice.meet(x, y))) {
          fail(report.transitivity, "(" + a.name(p) + "," + a.lattice.name(x) + "," +
                                        a.lattice.name(y) + ")");
          break;
        }

  for (int p = 0; p < n && report.combination.pass; ++p)
    for (int q = 0; q < n && report.combination.pass; ++q)
      for (int x = 0; x < nd; ++x) {
        const int lhs = a.focus(a.combine(a.focus(p, x), q), x);
        const int rhs = a.combine(a.focus(p, x), a.focus(q, x));
        if (lhs != rhs) {
          fail(report.combination,
               "(" + a.name(p) + "," + a.name(q) + "," + a.lattice.name(x) + ")");
          break;
        }
      }

  for (int p = 0; p < n; ++p) {
    bool supported = false;
    for (int x = 0; x < nd; ++x)
      if (a.focus(p, x) == p) { supported = true; break; }
    if (!supported) {
      fail(report.support, a.name(p));
      break;
    }
  }

  for (int p = 0; p < n && report.idempotency.pass; ++p)
    for (int x = 0; x < nd; ++x)
      if (a.combine(p, a.focus(p, x)) != p) {
        fail(report.idempotency, "(" + a.name(p) + "," + a.lattice.name(x) + ")");
        break;
      }

  return report;
}

Poset induced_order(const DomainFreeAlgebra& a) {
  const std::size_t n = a.size();
  for (std::size_t p = 0; p < n; ++p)
    require(a.combine(static_cast<int>(p), static_cast<int>(p)) == static_cast<int>(p),
            "combination not idempotent at '" + a.carrier[p] + "'");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      leq[p][q] = a.combine(static_cast<int>(p), static_cast<int>(q)) == static_cast<int>(q);
  return Poset::from_leq_matrix(a.carrier, std::move(leq));
}

bool check_induced_order_laws(const DomainFreeAlgebra& a) {
  const Poset order = induced_order(a);
  const int n = static_cast<int>(a.size());
  const int nd = static_cast<int>(a.lattice.size());
  for (int p = 0; p < n; ++p)
    for (int x = 0; x < nd; ++x)
      if (!order.le(a.focus(p, x), p)) return false;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      auto l = lub(order, std::vector<int>{p, q});
      if (!l || *l != a.combine(p, q)) return false;
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (!order.le(p, q)) continue;
      for (int x = 0; x < nd; ++x)
        if (!order.le(a.focus(p, x), a.focus(q, x))) return false;
    }
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y) {
      if (!a.lattice.le(x, y)) continue;
      for (int p = 0; p < n; ++p)
        if (!order.le(a.focus(p, x), a.focus(p, y))) return false;
    }
  return true;
}

std::vector<std::string> finite_elements(const DomainFreeAlgebra& a, const Caps& caps) {
  const Poset order = induced_order(a);
  const auto fam = DirectedFamily::enumerate(order, caps);
  std::vector<std::string> result;
  for (int i : fam.finite_elements()) result.push_back(a.name(i));
  return result;
}

BasisReport check_basis(const DomainFreeAlgebra& a, const Basis& basis, const Caps& caps) {
  BasisReport report;
  const Poset order = induced_order(a);
  const int n = static_cast<int>(a.size());

  std::vector<bool> in_basis(static_cast<std::size_t>(n), false);
  std::uint32_t basis_mask = 0;
  for (const auto& m : basis.members) {
    const int i = a.index(m);
    in_basis[static_cast<std::size_t>(i)] = true;
    if (n <= 30) basis_mask |= (1u << i);
  }

  report.contains_neutral = in_basis[static_cast<std::size_t>(a.neutral)];
  if (!report.contains_neutral)
    report.failures.emplace_back("contains_neutral", a.name(a.neutral));

  report.closed = true;
  for (int p = 0; p < n && report.closed; ++p)
    for (int q = 0; q < n; ++q) {
      if (!in_basis[static_cast<std::size_t>(p)] || !in_basis[static_cast<std::size_t>(q)]) continue;
      if (!in_basis[static_cast<std::size_t>(a.combine(p, q))]) {
        report.closed = false;
        report.failures.emplace_back(
            "closed_under_combination",
            "(" + a.name(p) + "," + a.name(q) + ") -> " + a.name(a.combine(p, q)));
        break;
      }
    }

  const auto fam = DirectedFamily::enumerate(order, caps);

  report.convergency = true;
  for (std::size_t k = 0; k < fam.masks().size(); ++k) {
    if ((fam.masks()[k] & ~basis_mask) != 0) continue;
    if (fam.lubs()[k] < 0) {
      report.convergency = false;
      report.failures.emplace_back("convergency", "directed subset without a supremum");
      break;
    }
  }

  report.density = true;
  for (int p = 0; p < n; ++p) {
    std::vector<int> witnesses;
    for (int q = 0; q < n; ++q)
      if (in_basis[static_cast<std::size_t>(q)] && fam.way_below(q, p)) witnesses.push_back(q);
    auto l = lub(order, witnesses);
    if (!l || *l != p) {
      report.density = false;
      report.failures.emplace_back("density", a.name(p));
      break;
    }
  }

  const int nd = static_cast<int>(a.lattice.size());
  report.strong_density = true;
  for (int p = 0; p < n && report.strong_density; ++p)
    for (int x = 0; x < nd; ++x) {
      std::vector<int> witnesses;
      for (int q = 0; q < n; ++q)
        if (in_basis[static_cast<std::size_t>(q)] && a.focus(q, x) == q && fam.way_below(q, p))
          witnesses.push_back(q);
      auto l = lub(order, witnesses);
      if (!l || *l != a.focus(p, x)) {
        report.strong_density = false;
        report.failures.emplace_back("strong_density",
                                     "(" + a.name(p) + "," + a.lattice.name(x) + ")");
        break;
      }
    }

  report.compactness = true;
  for (std::size_t k = 0; k < fam.masks().size() && report.compactness; ++k) {
    const std::uint32_t mask = fam.masks()[k];
    if ((mask & ~basis_mask) != 0) continue;
    const int l = fam.lubs()[k];
    if (l < 0) continue;
    for (int p = 0; p < n; ++p) {
      if (!in_basis[static_cast<std::size_t>(p)] || !order.le(p, l)) continue;
      bool dominated = false;
      for (int m : mask_members(mask))
        if (order.le(p, m)) { dominated = true; break; }
      if (!dominated) {
        report.compactness = false;
        report.failures.emplace_back("compactness", a.name(p));
        break;
      }
    }
  }

  const bool wellformed = report.contains_neutral && report.closed;
  report.certifies_continuous = wellformed && report.convergency && report.density;
  report.certifies_s_continuous = wellformed && report.convergency && report.strong_density;
  report.certifies_compact = report.certifies_continuous && report.compactness;
  report.certifies_s_compact = report.certifies_s_continuous && report.compactness;
  return report;
}

DirectednessReport approximant_directedness(const DomainFreeAlgebra& a, const Basis& basis,
                                            std::string_view phi, std::string_view x,
                                            const Caps& caps) {
  DirectednessReport report;
  const Poset order = induced_order(a);
  const auto fam = DirectedFamily::enumerate(order, caps);
  const int p = a.index(phi);
  const int xd = a.lattice.index(x);

  std::vector<int> plain, strong;
  for (const auto& m : basis.members) {
    const int q = a.index(m);
    if (fam.way_below(q, p)) {
      plain.push_back(q);
      if (a.focus(q, xd) == q) strong.push_back(q);
    }
  }
  report.plain_empty = plain.empty();
  report.strong_empty = strong.empty();
  report.plain_directed = plain.empty() || is_directed(order, plain);
  report.strong_directed = strong.empty() || is_directed(order, strong);
  return report;
}

bool generating_set_equivalence(const DomainFreeAlgebra& a, const Basis& upsilon,
                                const Caps& caps) {
  const Poset order = induced_order(a);
  const auto fam = DirectedFamily::enumerate(order, caps);
  const int n = static_cast<int>(a.size());
  const int nd = static_cast<int>(a.lattice.size());

  std::vector<bool> in_set(static_cast<std::size_t>(n), false);
  std::uint32_t set_mask = 0;
  for (const auto& m : upsilon.members) {
    const int i = a.index(m);
    in_set[static_cast<std::size_t>(i)] = true;
    set_mask |= (1u << i);
  }
  if (!in_set[static_cast<std::size_t>(a.neutral)]) return true;  // hypothesis fails

  bool convergency = true;
  for (std::size_t k = 0; k < fam.masks().size(); ++k) {
    if ((fam.masks()[k] & ~set_mask) != 0) continue;
    if (fam.lubs()[k] < 0) { convergency = false; break; }
  }

  bool density = true;
  for (int p = 0; p < n && density; ++p) {
    std::vector<int> witnesses;
    for (int q = 0; q < n; ++q)
      if (in_set[static_cast<std::size_t>(q)] && fam.way_below(q, p)) witnesses.push_back(q);
    auto l = lub(order, witnesses);
    density = is_directed(order, witnesses) && l && *l == p;
  }

  bool strong_density = true;
  for (int p = 0; p < n && strong_density; ++p)
    for (int x = 0; x < nd && strong_density; ++x) {
      std::vector<int> witnesses;
      for (int q = 0; q < n; ++q)
        if (in_set[static_cast<std::size_t>(q)] && a.focus(q, x) == q && fam.way_below(q, p))
          witnesses.push_back(q);
      auto l = lub(order, witnesses);
      strong_density = is_directed(order, witnesses) && l && *l == a.focus(p, x);
    }

  const Basis carrier_basis{a.carrier, true};
  const BasisReport carrier_report = check_basis(a, carrier_basis, caps);
  if (convergency && density && !carrier_report.certifies_continuous) return false;
  if (convergency && strong_density && !carrier_report.certifies_s_continuous) return false;
  return true;
}

ContinuityReport classify(const DomainFreeAlgebra& a, const Caps& caps) {
  ContinuityReport report;
  const Poset order = induced_order(a);
  const auto fam = DirectedFamily::enumerate(order, caps);
  const int n = static_cast<int>(a.size());
  const int nd = static_cast<int>(a.lattice.size());

  bool complete = true;
  {
    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      if (!lub(order, mask_members(mask))) {
        complete = false;
        report.witness_failures.emplace_back("complete_lattice", "subset without a supremum");
        break;
      }
    }
  }

  const auto fin = fam.finite_elements();
  for (int i : fin) report.finite_elements.push_back(a.name(i));

  report.continuous = complete;
  for (int p = 0; p < n && report.continuous; ++p) {
    std::vector<int> below;
    for (int q = 0; q < n; ++q)
      if (fam.way_below(q, p)) below.push_back(q);
    auto l = lub(order, below);
    if (!l || *l != p) {
      report.continuous = false;
      report.witness_failures.emplace_back("continuous", a.name(p));
    }
  }

  report.compact = complete;
  for (int p = 0; p < n && report.compact; ++p) {
    std::vector<int> witnesses;
    for (int q : fin)
      if (order.le(q, p)) witnesses.push_back(q);
    auto l = lub(order, witnesses);
    if (!l || *l != p) {
      report.compact = false;
      report.witness_failures.emplace_back("compact", a.name(p));
    }
  }

  report.s_continuous = complete;
  for (int p = 0; p < n && report.s_continuous; ++p)
    for (int x = 0; x < nd; ++x) {
      std::vector<int> witnesses;
      for (int q = 0; q < n; ++q)
        if (a.focus(q, x) == q && fam.way_below(q, p)) witnesses.push_back(q);
      auto l = lub(order, witnesses);
      if (!l || *l != a.focus(p, x)) {
        report.s_continuous = false;
        report.witness_failures.emplace_back("s_continuous",
                                             "(" + a.name(p) + "," + a.lattice.name(x) + ")");
        break;
      }
    }

  report.s_compact = complete;
  std::vector<bool> is_fin(static_cast<std::size_t>(n), false);
  for (int q : fin) is_fin[static_cast<std::size_t>(q)] = true;
  for (int p = 0; p < n && report.s_compact; ++p)
    for (int x = 0; x < nd; ++x) {
      std::vector<int> witnesses;
      for (int q = 0; q < n; ++q)
        if (is_fin[static_cast<std::size_t>(q)] && a.focus(q, x) == q && order.le(q, p))
          witnesses.push_back(q);
      auto l = lub(order, witnesses);
      if (!l || *l != a.focus(p, x)) {
        report.s_compact = false;
        report.witness_failures.emplace_back("s_compact",
                                             "(" + a.name(p) + "," + a.lattice.name(x) + ")");
        break;
      }
    }

  return report;
}

bool focus_preserves_directed_sups(const DomainFreeAlgebra& a, const Caps& caps) {
  const Poset order = induced_order(a);
  const auto fam = DirectedFamily::enumerate(order, caps);
  const int nd = static_cast<int>(a.lattice.size());
  for (std::size_t k = 0; k < fam.masks().size(); ++k) {
    const int l = fam.lubs()[k];
    if (l < 0) continue;
    const auto members = mask_members(fam.masks()[k]);
    for (int x = 0; x < nd; ++x) {
      std::vector<int> focused;
      focused.reserve(members.size());
      for (int m : members) focused.push_back(a.focus(m, x));
      auto fl = lub(order, focused);
      if (!fl || *fl != a.focus(l, x)) return false;
    }
  }
  return true;
}

}  // namespace infalg
