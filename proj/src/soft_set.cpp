#include "infalg/instances/soft_set.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace infalg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw malformed_error(what);
}

std::vector<std::string> subset_of_universe(std::uint32_t mask,
                                            const std::vector<std::string>& universe) {
  std::vector<std::string> out;
  for (std::uint32_t b = mask; b; b &= b - 1)
    out.push_back(universe[static_cast<std::size_t>(std::countr_zero(b))]);
  return out;
}

}  // namespace

SoftSet SoftSet::make(std::map<std::string, std::set<std::string>> values) {
  SoftSet s;
  for (const auto& [param, _] : values) s.params.push_back(param);
  s.values = std::move(values);
  return s;
}

SoftSet soft_extended_intersection(const SoftSet& f, const SoftSet& g) {
  std::map<std::string, std::set<std::string>> values;
  for (const auto& [e, fv] : f.values) {
    auto it = g.values.find(e);
    if (it == g.values.end()) {
      values[e] = fv;
    } else {
      std::set<std::string> meet;
      std::set_intersection(fv.begin(), fv.end(), it->second.begin(), it->second.end(),
                            std::inserter(meet, meet.begin()));
      values[e] = std::move(meet);
    }
  }
  for (const auto& [e, gv] : g.values)
    if (!f.values.count(e)) values[e] = gv;
  return SoftSet::make(std::move(values));
}

SoftSet soft_project(const SoftSet& f, const std::vector<std::string>& sub) {
  std::map<std::string, std::set<std::string>> values;
  for (const auto& e : sub) {
    auto it = f.values.find(e);
    require(it != f.values.end(), "projection target '" + e + "' not in the parameter set");
    values[e] = it->second;
  }
  return SoftSet::make(std::move(values));
}

std::string soft_set_name(const SoftSet& f) {
  std::string out = "s(";
  bool first = true;
  for (const auto& [e, v] : f.values) {
    if (!first) out += ",";
    first = false;
    out += e + "=" + set_name(std::vector<std::string>(v.begin(), v.end()));
  }
  out += ")";
  return out;
}

LabeledAlgebra soft_set_algebra(const std::vector<std::string>& universe,
                                const std::vector<std::string>& params, const Caps& caps) {
  require(universe.size() <= 8 && params.size() <= 4, "soft-set instance too large");
  std::vector<std::string> u = universe;
  std::vector<std::string> e = params;
  std::sort(u.begin(), u.end());
  std::sort(e.begin(), e.end());

  const std::uint32_t value_count = 1u << u.size();
  const std::uint32_t label_count = 1u << e.size();

  std::uint64_t carrier_size = 0;
  for (std::uint32_t a = 0; a < label_count; ++a) {
    std::uint64_t block = 1;
    for (int i = 0; i < std::popcount(a); ++i) block *= value_count;
    carrier_size += block;
    if (carrier_size > caps.max_carrier)
      throw resource_limit_error("soft-set carrier exceeds the carrier cap");
  }

  std::vector<SoftSet> all;
  std::vector<int> labels;
  for (std::uint32_t a = 0; a < label_count; ++a) {
    const auto param_list = subset_of_universe(a, e);
    const std::size_t k = param_list.size();
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < k; ++i) block *= value_count;
    for (std::uint64_t code = 0; code < block; ++code) {
      std::map<std::string, std::set<std::string>> values;
      std::uint64_t rest = code;
      for (std::size_t i = k; i-- > 0;) {
        const std::uint32_t vmask = static_cast<std::uint32_t>(rest % value_count);
        rest /= value_count;
        const auto members = subset_of_universe(vmask, u);
        values[param_list[i]] = std::set<std::string>(members.begin(), members.end());
      }
      all.push_back(SoftSet::make(std::move(values)));
      labels.push_back(static_cast<int>(a));
    }
  }

  std::vector<std::string> carrier;
  std::unordered_map<std::string, int> by_name;
  for (std::size_t i = 0; i < all.size(); ++i) {
    carrier.push_back(soft_set_name(all[i]));
    by_name[carrier.back()] = static_cast<int>(i);
  }

  FiniteLattice lattice = powerset_lattice(e);

  const std::size_t n = all.size();
  const std::size_t nd = lattice.size();
  std::vector<std::vector<int>> combine(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      combine[i][j] = by_name.at(soft_set_name(soft_extended_intersection(all[i], all[j])));

  std::vector<std::vector<int>> marginalize(n, std::vector<int>(nd, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < nd; ++x) {
      const std::uint32_t xmask = static_cast<std::uint32_t>(x);
      if ((xmask & ~static_cast<std::uint32_t>(labels[i])) != 0) continue;
      marginalize[i][x] = by_name.at(soft_set_name(soft_project(all[i], subset_of_universe(xmask, e))));
    }

  std::vector<int> neutrals(nd, -1);
  for (std::size_t x = 0; x < nd; ++x) {
    std::map<std::string, std::set<std::string>> values;
    for (const auto& param : subset_of_universe(static_cast<std::uint32_t>(x), e))
      values[param] = std::set<std::string>(u.begin(), u.end());
    neutrals[x] = by_name.at(soft_set_name(SoftSet::make(std::move(values))));
  }

  return LabeledAlgebra(std::move(carrier), std::move(lattice), std::move(labels),
                        std::move(combine), std::move(marginalize), std::move(neutrals));
}

FiniteOrCofinite FiniteOrCofinite::finite(std::set<std::uint64_t> members) {
  FiniteOrCofinite v;
  v.finite_ = true;
  v.support_ = std::move(members);
  return v;
}

FiniteOrCofinite FiniteOrCofinite::cofinite_excluding(std::set<std::uint64_t> excluded) {
  FiniteOrCofinite v;
  v.finite_ = false;
  v.support_ = std::move(excluded);
  return v;
}

bool FiniteOrCofinite::contains(std::uint64_t x) const {
  const bool in_support = support_.count(x) > 0;
  return finite_ ? in_support : !in_support;
}

FiniteOrCofinite FiniteOrCofinite::intersect(const FiniteOrCofinite& other) const {
  if (finite_ || other.finite_) {
    const FiniteOrCofinite& fin = finite_ ? *this : other;
    const FiniteOrCofinite& any = finite_ ? other : *this;
    std::set<std::uint64_t> members;
    for (std::uint64_t x : fin.support_)
      if (any.contains(x)) members.insert(x);
    return finite(std::move(members));
  }
  std::set<std::uint64_t> excluded = support_;
  excluded.insert(other.support_.begin(), other.support_.end());
  return cofinite_excluding(std::move(excluded));
}

bool FiniteOrCofinite::subset_of(const FiniteOrCofinite& other) const {
  if (finite_) {
    for (std::uint64_t x : support_)
      if (!other.contains(x)) return false;
    return true;
  }
  if (other.finite_) return false;  // a cofinite set is never inside a finite one
  return std::includes(support_.begin(), support_.end(), other.support_.begin(),
                       other.support_.end());
}

std::string FiniteOrCofinite::str() const {
  std::string out = finite_ ? "{" : "U-{";
  bool first = true;
  for (std::uint64_t x : support_) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(x);
  }
  return out + "}";
}

CofiniteSoftSet CofiniteSoftSet::make(std::map<std::string, FiniteOrCofinite> values) {
  CofiniteSoftSet s;
  for (const auto& [param, _] : values) s.params.push_back(param);
  s.values = std::move(values);
  return s;
}

CofiniteSoftAlgebra::CofiniteSoftAlgebra(std::vector<std::string> param_universe)
    : params_(std::move(param_universe)) {
  std::sort(params_.begin(), params_.end());
  require(std::adjacent_find(params_.begin(), params_.end()) == params_.end(),
          "duplicate parameter");
}

void CofiniteSoftAlgebra::check_label(const CofiniteSoftSet& a) const {
  for (const auto& p : a.params)
    require(std::binary_search(params_.begin(), params_.end(), p),
            "parameter '" + p + "' outside the parameter universe");
}

bool CofiniteSoftAlgebra::leq(const CofiniteSoftSet& a, const CofiniteSoftSet& b) const {
  check_label(a);
  check_label(b);
  for (const auto& [e, av] : a.values) {
    auto it = b.values.find(e);
    if (it == b.values.end()) return false;
    if (!it->second.subset_of(av)) return false;
  }
  return true;
}

CofiniteSoftSet CofiniteSoftAlgebra::combine(const CofiniteSoftSet& a,
                                             const CofiniteSoftSet& b) const {
  check_label(a);
  check_label(b);
  std::map<std::string, FiniteOrCofinite> values;
  for (const auto& [e, av] : a.values) {
    auto it = b.values.find(e);
    values.emplace(e, it == b.values.end() ? av : av.intersect(it->second));
  }
  for (const auto& [e, bv] : b.values)
    if (!a.values.count(e)) values.emplace(e, bv);
  return CofiniteSoftSet::make(std::move(values));
}

CofiniteSoftSet CofiniteSoftAlgebra::project(const CofiniteSoftSet& a,
                                             const std::vector<std::string>& sub) const {
  check_label(a);
  std::map<std::string, FiniteOrCofinite> values;
  for (const auto& e : sub) {
    auto it = a.values.find(e);
    require(it != a.values.end(), "projection target '" + e + "' not in the parameter set");
    values.emplace(e, it->second);
  }
  return CofiniteSoftSet::make(std::move(values));
}

CofiniteSoftSet CofiniteSoftAlgebra::neutral(const std::vector<std::string>& label) const {
  std::map<std::string, FiniteOrCofinite> values;
  for (const auto& e : label) values.emplace(e, FiniteOrCofinite::universe());
  auto result = CofiniteSoftSet::make(std::move(values));
  check_label(result);
  return result;
}

bool CofiniteSoftAlgebra::is_finite_element(const CofiniteSoftSet& a) const {
  check_label(a);
  for (const auto& [_, v] : a.values)
    if (!v.is_cofinite()) return false;
  return true;
}

bool CofiniteSoftAlgebra::way_below_local(const CofiniteSoftSet& a,
                                          const CofiniteSoftSet& b) const {
  require(a.params == b.params, "way-below is evaluated inside one slice");
  return is_finite_element(a) && leq(a, b);
}

bool CofiniteSoftAlgebra::finite_element_probe(const CofiniteSoftSet& a,
                                               std::uint64_t depth) const {
  check_label(a);
  // Member of the exhausting family at this depth: per parameter, exclude
  // the first `depth` elements of the value's complement.
  for (const auto& [e, v] : a.values) {
    std::set<std::uint64_t> prefix;
    if (v.is_cofinite()) {
      for (std::uint64_t x : v.support()) {
        if (prefix.size() >= depth) break;
        prefix.insert(x);
      }
    } else {
      for (std::uint64_t x = 0; prefix.size() < depth; ++x)
        if (!v.contains(x)) prefix.insert(x);
    }
    const auto member_value = FiniteOrCofinite::cofinite_excluding(std::move(prefix));
    // Domination at e requires member_value inside the original value.
    if (!member_value.subset_of(v)) return false;
  }
  return true;
}

CofiniteSoftSet CofiniteSoftAlgebra::directed_sup(
    const std::vector<CofiniteSoftSet>& family) const {
  if (family.empty()) throw contract_error("directed supremum of an empty family");
  for (const auto& s : family) {
    check_label(s);
    if (s.params != family.front().params)
      throw contract_error("directed supremum across different labels");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      bool bounded = false;
      for (const auto& c : family)
        if (leq(family[i], c) && leq(family[j], c)) { bounded = true; break; }
      if (!bounded) throw contract_error("family is not directed");
    }
  }
  std::map<std::string, FiniteOrCofinite> values;
  for (const auto& [e, v] : family.front().values) {
    FiniteOrCofinite acc = v;
    for (std::size_t i = 1; i < family.size(); ++i) acc = acc.intersect(family[i].values.at(e));
    values.emplace(e, std::move(acc));
  }
  return CofiniteSoftSet::make(std::move(values));
}

CofiniteSoftSet CofiniteSoftAlgebra::density_sup(const CofiniteSoftSet& a) const {
  check_label(a);
  // The witnesses below a are exactly the soft sets whose values are
  // cofinite supersets of a's values; intersecting all cofinite supersets
  // of a set gives the set back, value by value.
  return a;
}

CofiniteSoftSet CofiniteSoftAlgebra::density_partial_sup(const CofiniteSoftSet& a,
                                                         std::uint64_t depth) const {
  check_label(a);
  std::map<std::string, FiniteOrCofinite> values;
  for (const auto& [e, v] : a.values) {
    std::set<std::uint64_t> prefix;
    if (v.is_cofinite()) {
      for (std::uint64_t x : v.support()) {
        if (prefix.size() >= depth) break;
        prefix.insert(x);
      }
    } else {
      for (std::uint64_t x = 0; prefix.size() < depth; ++x)
        if (!v.contains(x)) prefix.insert(x);
    }
    values.emplace(e, FiniteOrCofinite::cofinite_excluding(std::move(prefix)));
  }
  return CofiniteSoftSet::make(std::move(values));
}

LabeledContinuityReport CofiniteSoftAlgebra::labeled_report() const {
  LabeledContinuityReport report;
  // Deterministic sample battery per label: mixes of finite and cofinite
  // values built from small index sets.
  const std::vector<FiniteOrCofinite> sample_values = {
      FiniteOrCofinite::universe(),
      FiniteOrCofinite::cofinite_excluding({0}),
      FiniteOrCofinite::cofinite_excluding({1, 3}),
      FiniteOrCofinite::finite({}),
      FiniteOrCofinite::finite({0, 2}),
  };

  const std::uint32_t label_count = 1u << params_.size();
  bool all_ok = true;
  for (std::uint32_t mask = 0; mask < label_count; ++mask) {
    LabeledDomainReport dr;
    const auto label = subset_of_universe(mask, params_);
    dr.domain = set_name(label);
    dr.family_ok = true;

    // Closure of the finite elements under combination: cofinite values are
    // closed under intersection; verified on the samples.
    for (const auto& v1 : sample_values)
      for (const auto& v2 : sample_values)
        if (v1.is_cofinite() && v2.is_cofinite() && !v1.intersect(v2).is_cofinite())
          dr.family_ok = false;

    // Convergency: finitely generated directed families of finite elements
    // have suprema with cofinite values.
    dr.convergency = true;
    if (!label.empty()) {
      std::vector<CofiniteSoftSet> chain;
      for (std::uint64_t d = 0; d < 3; ++d) {
        std::map<std::string, FiniteOrCofinite> values;
        std::set<std::uint64_t> excl;
        for (std::uint64_t x = 0; x < d; ++x) excl.insert(x);
        for (const auto& e : label) values.emplace(e, FiniteOrCofinite::cofinite_excluding(excl));
        chain.push_back(CofiniteSoftSet::make(std::move(values)));
      }
      const auto sup = directed_sup(chain);
      dr.convergency = is_finite_element(sup);
    }

    // Density: the finite-element witnesses below any sample reconstruct it
    // in the limit; the closed-form sup equals the element and every
    // partial sup stays below it.
    dr.density = true;
    if (!label.empty()) {
      for (const auto& v : sample_values) {
        std::map<std::string, FiniteOrCofinite> values;
        for (const auto& e : label) values.emplace(e, v);
        const auto sample = CofiniteSoftSet::make(std::move(values));
        if (!(density_sup(sample) == sample)) dr.density = false;
        for (std::uint64_t d = 0; d <= 4; ++d)
          if (!leq(density_partial_sup(sample, d), sample)) dr.density = false;
        const bool reaches = finite_element_probe(sample, 8);
        if (reaches != is_finite_element(sample)) dr.density = false;
      }
    }
    // Extending a cofinite-valued soft set to the full parameter set keeps
    // every value cofinite, so the strong-density witnesses coincide with
    // the density witnesses.
    dr.strong_density = dr.density;
    if (!label.empty()) {
      for (const auto& v : sample_values) {
        if (!v.is_cofinite()) continue;
        std::map<std::string, FiniteOrCofinite> values;
        for (const auto& e : label) values.emplace(e, v);
        const auto sample = CofiniteSoftSet::make(std::move(values));
        const auto extended = combine(sample, neutral(params_));
        if (!is_finite_element(extended)) dr.strong_density = false;
      }
    }

    // Compactness: a finite element below the sup of a finitely generated
    // directed family is below some member (the family's maximum).
    dr.compactness = true;
    if (!label.empty()) {
      std::vector<CofiniteSoftSet> chain;
      for (std::uint64_t d = 1; d <= 3; ++d) {
        std::map<std::string, FiniteOrCofinite> values;
        std::set<std::uint64_t> excl;
        for (std::uint64_t x = 0; x < d; ++x) excl.insert(x);
        for (const auto& e : label) values.emplace(e, FiniteOrCofinite::cofinite_excluding(excl));
        chain.push_back(CofiniteSoftSet::make(std::move(values)));
      }
      const auto sup = directed_sup(chain);
      std::map<std::string, FiniteOrCofinite> values;
      for (const auto& e : label) values.emplace(e, FiniteOrCofinite::cofinite_excluding({0, 1}));
      const auto probe = CofiniteSoftSet::make(std::move(values));
      if (leq(probe, sup)) {
        bool dominated = false;
        for (const auto& c : chain)
          if (leq(probe, c)) dominated = true;
        if (!dominated) dr.compactness = false;
      }
    }

    all_ok = all_ok && dr.family_ok && dr.convergency && dr.density && dr.strong_density &&
             dr.compactness;
    report.per_domain.push_back(std::move(dr));
  }

  report.continuous = all_ok;
  report.s_continuous = all_ok;
  report.compact = all_ok;
  report.s_compact = all_ok;
  return report;
}

}  // namespace infalg
