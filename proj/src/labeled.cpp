#include "infalg/labeled.hpp"

#include <algorithm>
#include <bit>

namespace infalg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw malformed_error(what);
}

}  // namespace

LabeledAlgebra::LabeledAlgebra(std::vector<std::string> carrier_, FiniteLattice lattice_,
                               std::vector<int> label_, std::vector<std::vector<int>> combine,
                               std::vector<std::vector<int>> marginalize,
                               std::vector<int> neutrals_)
    : carrier(std::move(carrier_)),
      lattice(std::move(lattice_)),
      label(std::move(label_)),
      combine_table(std::move(combine)),
      marginalize_table(std::move(marginalize)),
      neutrals(std::move(neutrals_)) {
  const std::size_t n = carrier.size();
  const std::size_t nd = lattice.size();
  require(n > 0, "empty carrier");
  {
    std::vector<std::string> sorted = carrier;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "duplicate carrier identifier");
  }
  require(label.size() == n, "label map has wrong size");
  for (int v : label) require(v >= 0 && v < static_cast<int>(nd), "label out of range");
  require(combine_table.size() == n, "combination table has wrong row count");
  for (const auto& row : combine_table) {
    require(row.size() == n, "combination table has wrong column count");
    for (int v : row) require(v >= 0 && v < static_cast<int>(n), "combination entry out of range");
  }
  require(marginalize_table.size() == n, "marginalization table has wrong row count");
  for (const auto& row : marginalize_table) {
    require(row.size() == nd, "marginalization table has wrong column count");
    for (int v : row) require(v >= -1 && v < static_cast<int>(n), "marginalization entry out of range");
  }
  require(neutrals.size() == nd, "neutrals map has wrong size");
  for (int v : neutrals) require(v >= 0 && v < static_cast<int>(n), "neutral out of range");
  require(lattice.top() >= 0, "domain lattice lacks a top element");
}

int LabeledAlgebra::index(std::string_view id) const {
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (carrier[i] == id) return static_cast<int>(i);
  throw malformed_error("unknown carrier element '" + std::string(id) + "'");
}

int LabeledAlgebra::marginalize(int p, int x) const {
  const int v = marginalize_table[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)];
  if (v < 0)
    throw contract_error("marginalization of '" + name(p) + "' to '" + lattice.name(x) +
                         "' is outside the defined domain");
  return v;
}

std::vector<int> LabeledAlgebra::slice(int x) const {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(size()); ++p)
    if (domain_of(p) == x) out.push_back(p);
  return out;
}

LabeledAxiomReport check_labeled_axioms(const LabeledAlgebra& a) {
  LabeledAxiomReport report;
  const int n = static_cast<int>(a.size());
  const int nd = static_cast<int>(a.lattice.size());

  auto fail = [&](AxiomCheck& check, std::string detail) {
    if (check.pass) {
      check.pass = false;
      check.counterexample = std::move(detail);
    }
  };
  auto marg = [&](int p, int x) {
    return a.marginalize_table[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)];
  };

  // Semigroup: commutativity, associativity, per-domain neutral elements.
  for (int x = 0; x < nd && report.semigroup.pass; ++x) {
    const int e = a.neutral_of(x);
    if (a.domain_of(e) != x) {
      fail(report.semigroup, "neutral of " + a.lattice.name(x) + " has label " +
                                 a.lattice.name(a.domain_of(e)));
      break;
    }
    for (int p = 0; p < n; ++p)
      if (a.domain_of(p) == x && a.combine(e, p) != p) {
        fail(report.semigroup, "neutral: combine(" + a.name(e) + "," + a.name(p) + ")");
        break;
      }
  }
  for (int p = 0; p < n && report.semigroup.pass; ++p)
    for (int q = 0; q < n && report.semigroup.pass; ++q) {
      if (a.combine(p, q) != a.combine(q, p))
        fail(report.semigroup, "commutativity: (" + a.name(p) + "," + a.name(q) + ")");
      for (int r = 0; r < n; ++r)
        if (a.combine(a.combine(p, q), r) != a.combine(p, a.combine(q, r))) {
          fail(report.semigroup,
               "associativity: (" + a.name(p) + "," + a.name(q) + "," + a.name(r) + ")");
          break;
        }
    }

  for (int p = 0; p < n && report.labeling.pass; ++p)
    for (int q = 0; q < n; ++q)
      if (a.domain_of(a.combine(p, q)) != a.lattice.join(a.domain_of(p), a.domain_of(q))) {
        fail(report.labeling, "(" + a.name(p) + "," + a.name(q) + ")");
        break;
      }

  // Marginalization: defined exactly below the label, and relabels to x.
  for (int p = 0; p < n && report.marginalization.pass; ++p)
    for (int x = 0; x < nd; ++x) {
      const bool should = a.lattice.le(x, a.domain_of(p));
      const int v = marg(p, x);
      if (should != (v >= 0)) {
        fail(report.marginalization,
             std::string(should ? "missing" : "extraneous") + " entry (" + a.name(p) + "," +
                 a.lattice.name(x) + ")");
        break;
      }
      if (v >= 0 && a.domain_of(v) != x) {
        fail(report.marginalization, "label of (" + a.name(p) + ")^(" + a.lattice.name(x) + ")");
        break;
      }
    }

  if (report.marginalization.pass) {
    for (int p = 0; p < n && report.transitivity.pass; ++p)
      for (int x = 0; x < nd && report.transitivity.pass; ++x)
        for (int y = 0; y < nd; ++y) {
          if (!a.lattice.le(x, y) || !a.lattice.le(y, a.domain_of(p))) continue;
          if (marg(marg(p, y), x) != marg(p, x)) {
            fail(report.transitivity,
                 "(" + a.name(p) + "," + a.lattice.name(x) + "," + a.lattice.name(y) + ")");
            break;
          }
        }

    for (int p = 0; p < n && report.combination.pass; ++p)
      for (int q = 0; q < n; ++q) {
        const int x = a.domain_of(p);
        const int y = a.domain_of(q);
        const int lhs = marg(a.combine(p, q), x);
        const int rhs = a.combine(p, marg(q, a.lattice.meet(x, y)));
        if (lhs != rhs) {
          fail(report.combination, "(" + a.name(p) + "," + a.name(q) + ")");
          break;
        }
      }

    for (int x = 0; x < nd && report.stability.pass; ++x)
      for (int y = 0; y < nd; ++y) {
        if (!a.lattice.le(x, y)) continue;
        if (marg(a.neutral_of(y), x) != a.neutral_of(x)) {
          fail(report.stability, "(" + a.lattice.name(x) + "," + a.lattice.name(y) + ")");
          break;
        }
      }

    for (int p = 0; p < n && report.idempotency.pass; ++p)
      for (int x = 0; x < nd; ++x) {
        if (!a.lattice.le(x, a.domain_of(p))) continue;
        if (a.combine(p, marg(p, x)) != p) {
          fail(report.idempotency, "(" + a.name(p) + "," + a.lattice.name(x) + ")");
          break;
        }
      }
  } else {
    // Marginalization table is broken; dependent axioms cannot be evaluated.
    fail(report.transitivity, "marginalization table malformed");
    fail(report.combination, "marginalization table malformed");
    fail(report.stability, "marginalization table malformed");
    fail(report.idempotency, "marginalization table malformed");
  }

  return report;
}

int vacuous_extension(const LabeledAlgebra& a, int phi, int y) {
  if (!a.lattice.le(a.domain_of(phi), y))
    throw contract_error("vacuous extension target '" + a.lattice.name(y) +
                         "' is not above the label of '" + a.name(phi) + "'");
  return a.combine(phi, a.neutral_of(y));
}

std::string vacuous_extension(const LabeledAlgebra& a, std::string_view phi, std::string_view y) {
  return a.name(vacuous_extension(a, a.index(phi), a.lattice.index(y)));
}

LocalPoset local_poset(const LabeledAlgebra& a, int x) {
  LocalPoset result;
  result.global = a.slice(x);
  const std::size_t m = result.global.size();
  std::vector<std::string> names;
  names.reserve(m);
  for (int g : result.global) names.push_back(a.name(g));
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      leq[i][j] = a.combine(result.global[i], result.global[j]) == result.global[j];
  result.poset = Poset::from_leq_matrix(std::move(names), std::move(leq));
  return result;
}

int LocalPoset::local_of(int global_index) const {
  for (std::size_t i = 0; i < global.size(); ++i)
    if (global[i] == global_index) return static_cast<int>(i);
  return -1;
}

LocalBasisFamily full_local_family(const LabeledAlgebra& a) {
  LocalBasisFamily family;
  for (int x = 0; x < static_cast<int>(a.lattice.size()); ++x) {
    std::vector<std::string> members;
    for (int p : a.slice(x)) members.push_back(a.name(p));
    family.members[a.lattice.name(x)] = std::move(members);
  }
  return family;
}

LocalBasisFamily finite_local_family(const LabeledAlgebra& a, const Caps& caps) {
  LocalBasisFamily family;
  for (int x = 0; x < static_cast<int>(a.lattice.size()); ++x) {
    const LocalPoset local = local_poset(a, x);
    const auto fam = DirectedFamily::enumerate(local.poset, caps);
    std::vector<std::string> members;
    for (int i : fam.finite_elements()) members.push_back(local.poset.name(i));
    family.members[a.lattice.name(x)] = std::move(members);
  }
  return family;
}

LabeledContinuityReport check_labeled_continuity(const LabeledAlgebra& a,
                                                 const LocalBasisFamily& family,
                                                 const Caps& caps) {
  LabeledContinuityReport report;
  const int nd = static_cast<int>(a.lattice.size());
  const int top = a.lattice.top();

  auto family_members = [&](int x) -> const std::vector<std::string>* {
    auto it = family.members.find(a.lattice.name(x));
    return it == family.members.end() ? nullptr : &it->second;
  };

  // Membership of the top-domain family, for the strong-density side
  // condition (extension of a witness must land in the top family).
  std::vector<bool> in_top_family(a.size(), false);
  if (const auto* tm = family_members(top))
    for (const auto& m : *tm) in_top_family[static_cast<std::size_t>(a.index(m))] = true;

  bool all_family_ok = true, all_conv = true, all_density = true, all_strong = true,
       all_compact = true;

  for (int x = 0; x < nd; ++x) {
    LabeledDomainReport dr;
    dr.domain = a.lattice.name(x);
    const LocalPoset local = local_poset(a, x);
    const std::size_t m = local.global.size();
    const auto fam = DirectedFamily::enumerate(local.poset, caps);

    std::vector<bool> in_basis(m, false);
    std::uint32_t basis_mask = 0;
    dr.family_ok = true;
    if (const auto* members = family_members(x)) {
      for (const auto& name : *members) {
        const int g = a.index(name);
        const int l = local.local_of(g);
        if (l < 0 || a.domain_of(g) != x) {
          dr.family_ok = false;
          report.witness_failures.emplace_back("family_label", name);
          break;
        }
        in_basis[static_cast<std::size_t>(l)] = true;
        basis_mask |= (1u << l);
      }
    } else {
      dr.family_ok = false;
      report.witness_failures.emplace_back("family_missing", dr.domain);
    }
    const int e_local = local.local_of(a.neutral_of(x));
    if (dr.family_ok && (e_local < 0 || !in_basis[static_cast<std::size_t>(e_local)])) {
      dr.family_ok = false;
      report.witness_failures.emplace_back("family_neutral", dr.domain);
    }
    if (dr.family_ok) {
      for (std::size_t i = 0; i < m && dr.family_ok; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          if (!in_basis[i] || !in_basis[j]) continue;
          const int combined = a.combine(local.global[i], local.global[j]);
          const int lc = local.local_of(combined);
          if (lc < 0 || !in_basis[static_cast<std::size_t>(lc)]) {
            dr.family_ok = false;
            report.witness_failures.emplace_back(
                "family_closure", "(" + local.poset.name(static_cast<int>(i)) + "," +
                                      local.poset.name(static_cast<int>(j)) + ")");
            break;
          }
        }
    }

    dr.convergency = true;
    for (std::size_t k = 0; k < fam.masks().size(); ++k) {
      if ((fam.masks()[k] & ~basis_mask) != 0) continue;
      if (fam.lubs()[k] < 0) {
        dr.convergency = false;
        report.witness_failures.emplace_back("convergency", dr.domain);
        break;
      }
    }

    dr.density = true;
    for (std::size_t p = 0; p < m; ++p) {
      std::vector<int> witnesses;
      for (std::size_t q = 0; q < m; ++q)
        if (in_basis[q] && fam.way_below(static_cast<int>(q), static_cast<int>(p)))
          witnesses.push_back(static_cast<int>(q));
      auto l = lub(local.poset, witnesses);
      if (!l || *l != static_cast<int>(p)) {
        dr.density = false;
        report.witness_failures.emplace_back("density",
                                             dr.domain + ":" + local.poset.name(static_cast<int>(p)));
        break;
      }
    }

    dr.strong_density = true;
    for (std::size_t p = 0; p < m; ++p) {
      std::vector<int> witnesses;
      for (std::size_t q = 0; q < m; ++q) {
        if (!in_basis[q]) continue;
        const int extended = vacuous_extension(a, local.global[q], top);
        if (!in_top_family[static_cast<std::size_t>(extended)]) continue;
        if (fam.way_below(static_cast<int>(q), static_cast<int>(p)))
          witnesses.push_back(static_cast<int>(q));
      }
      auto l = lub(local.poset, witnesses);
      if (!l || *l != static_cast<int>(p)) {
        dr.strong_density = false;
        report.witness_failures.emplace_back(
            "strong_density", dr.domain + ":" + local.poset.name(static_cast<int>(p)));
        break;
      }
    }

    dr.compactness = true;
    for (std::size_t k = 0; k < fam.masks().size() && dr.compactness; ++k) {
      const std::uint32_t mask = fam.masks()[k];
      if ((mask & ~basis_mask) != 0) continue;
      const int l = fam.lubs()[k];
      if (l < 0) continue;
      for (std::size_t p = 0; p < m; ++p) {
        if (!in_basis[p] || !local.poset.le(static_cast<int>(p), l)) continue;
        bool dominated = false;
        for (std::uint32_t b = mask; b; b &= b - 1)
          if (local.poset.le(static_cast<int>(p), std::countr_zero(b))) {
            dominated = true;
            break;
          }
        if (!dominated) {
          dr.compactness = false;
          report.witness_failures.emplace_back(
              "compactness", dr.domain + ":" + local.poset.name(static_cast<int>(p)));
          break;
        }
      }
    }

    std::vector<std::string> fin;
    for (int i : fam.finite_elements()) fin.push_back(local.poset.name(i));
    report.finite_elements[dr.domain] = std::move(fin);

    all_family_ok = all_family_ok && dr.family_ok;
    all_conv = all_conv && dr.convergency;
    all_density = all_density && dr.density;
    all_strong = all_strong && dr.strong_density;
    all_compact = all_compact && dr.compactness;
    report.per_domain.push_back(std::move(dr));
  }

  report.continuous = all_family_ok && all_conv && all_density;
  report.s_continuous = all_family_ok && all_conv && all_strong;
  report.compact = report.continuous && all_compact;
  report.s_compact = report.s_continuous && all_compact;
  return report;
}

bool check_compact_basis_laws(const LabeledAlgebra& a, const LocalBasisFamily& family,
                              const Caps& caps) {
  for (int x = 0; x < static_cast<int>(a.lattice.size()); ++x) {
    const LocalPoset local = local_poset(a, x);
    const auto fam = DirectedFamily::enumerate(local.poset, caps);
    const std::size_t m = local.global.size();

    std::vector<bool> in_basis(m, false);
    auto it = family.members.find(a.lattice.name(x));
    if (it == family.members.end()) return false;
    for (const auto& name : it->second) {
      const int l = local.local_of(a.index(name));
      if (l < 0) return false;
      in_basis[static_cast<std::size_t>(l)] = true;
    }

    for (std::size_t p = 0; p < m; ++p) {
      const bool self_way_below = fam.way_below(static_cast<int>(p), static_cast<int>(p));
      if (in_basis[p] != self_way_below) return false;
    }
    for (std::size_t p = 0; p < m; ++p) {
      if (!in_basis[p]) continue;
      for (std::size_t q = 0; q < m; ++q) {
        const bool wb = fam.way_below(static_cast<int>(p), static_cast<int>(q));
        const bool le = local.poset.le(static_cast<int>(p), static_cast<int>(q));
        if (wb != le) return false;
      }
    }
  }
  return true;
}

}  // namespace infalg
