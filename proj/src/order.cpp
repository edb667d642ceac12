#include "infalg/order.hpp"

#include <algorithm>
#include <bit>

namespace infalg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw malformed_error(what);
}

std::size_t checked_size(std::size_t n, const Caps& caps) {
  if (n > caps.max_enum_elements || n > 30) {
    throw resource_limit_error("poset of size " + std::to_string(n) +
                               " exceeds the subset-enumeration cap of " +
                               std::to_string(std::min<std::size_t>(caps.max_enum_elements, 30)));
  }
  return n;
}

}  // namespace

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  elements_ = std::move(elements);
  build_index();
  const std::size_t n = elements_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : leq_pairs) {
    leq_[static_cast<std::size_t>(index(a))][static_cast<std::size_t>(index(b))] = true;
  }
  // Warshall transitive closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      require(!(i != j && leq_[i][j] && leq_[j][i]),
              "order cycle between '" + elements_[i] + "' and '" + elements_[j] + "'");
}

Poset Poset::from_leq_matrix(std::vector<std::string> elements,
                             std::vector<std::vector<bool>> leq) {
  Poset p;
  p.elements_ = std::move(elements);
  p.leq_ = std::move(leq);
  p.build_index();
  require(p.leq_.size() == p.elements_.size(), "leq matrix has wrong row count");
  for (const auto& row : p.leq_) require(row.size() == p.elements_.size(), "leq matrix has wrong column count");
  p.validate();
  return p;
}

void Poset::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    require(!elements_[i].empty(), "empty element identifier");
    auto [it, fresh] = index_.emplace(elements_[i], static_cast<int>(i));
    (void)it;
    require(fresh, "duplicate element identifier '" + elements_[i] + "'");
  }
}

void Poset::validate() const {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i)
    require(leq_[i][i], "relation not reflexive at '" + elements_[i] + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(!(i != j && leq_[i][j] && leq_[j][i]),
              "relation not antisymmetric on '" + elements_[i] + "','" + elements_[j] + "'");
      if (!leq_[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        require(!leq_[j][k] || leq_[i][k],
                "relation not transitive via '" + elements_[j] + "'");
    }
}

int Poset::index(std::string_view id) const {
  const int i = find(id);
  if (i < 0) throw malformed_error("unknown element identifier '" + std::string(id) + "'");
  return i;
}

int Poset::find(std::string_view id) const noexcept {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

std::optional<int> Poset::bottom() const {
  const int n = static_cast<int>(size());
  for (int b = 0; b < n; ++b) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = le(b, x);
    if (ok) return b;
  }
  return std::nullopt;
}

std::optional<int> Poset::top() const {
  const int n = static_cast<int>(size());
  for (int t = 0; t < n; ++t) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = le(x, t);
    if (ok) return t;
  }
  return std::nullopt;
}

DirectedSubset::DirectedSubset(const Poset& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
  if (!is_directed(parent, members_)) throw malformed_error("subset is not directed");
}

bool is_directed(const Poset& p, const std::vector<int>& members) {
  if (members.empty()) return false;
  const int n = static_cast<int>(p.size());
  for (int m : members) {
    if (m < 0 || m >= n) throw malformed_error("member index out of range");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      bool bounded = false;
      for (int c : members) {
        if (p.le(members[i], c) && p.le(members[j], c)) { bounded = true; break; }
      }
      if (!bounded) return false;
    }
  }
  return true;
}

bool is_directed(const Poset& p, const std::vector<std::string>& members) {
  std::vector<int> idx;
  idx.reserve(members.size());
  for (const auto& m : members) idx.push_back(p.index(m));
  return is_directed(p, idx);
}

std::optional<int> lub(const Poset& p, const std::vector<int>& members) {
  const int n = static_cast<int>(p.size());
  for (int m : members) {
    if (m < 0 || m >= n) throw malformed_error("member index out of range");
  }
  if (members.empty()) return p.bottom();
  std::vector<int> uppers;
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for (int m : members) {
      if (!p.le(m, u)) { ok = false; break; }
    }
    if (ok) uppers.push_back(u);
  }
  for (int u0 : uppers) {
    bool least = true;
    for (int u : uppers) {
      if (!p.le(u0, u)) { least = false; break; }
    }
    if (least) return u0;
  }
  return std::nullopt;
}

std::optional<std::string> lub(const Poset& p, const std::vector<std::string>& members) {
  std::vector<int> idx;
  idx.reserve(members.size());
  for (const auto& m : members) idx.push_back(p.index(m));
  auto r = lub(p, idx);
  if (!r) return std::nullopt;
  return p.name(*r);
}

DirectedFamily DirectedFamily::enumerate(const Poset& p, const Caps& caps) {
  const std::size_t n = checked_size(p.size(), caps);
  DirectedFamily fam;
  fam.poset_ = &p;
  fam.up_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.le(static_cast<int>(i), static_cast<int>(j))) fam.up_[i] |= (1u << j);

  const std::uint32_t total = n == 0 ? 1u : (1u << n);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    bool directed = true;
    for (std::uint32_t bi = mask; directed && bi; bi &= bi - 1) {
      const int i = std::countr_zero(bi);
      for (std::uint32_t bj = bi; bj; bj &= bj - 1) {
        const int j = std::countr_zero(bj);
        if ((mask & fam.up_[static_cast<std::size_t>(i)] & fam.up_[static_cast<std::size_t>(j)]) == 0) {
          directed = false;
          break;
        }
      }
    }
    if (!directed) continue;
    std::vector<int> members;
    for (std::uint32_t b = mask; b; b &= b - 1) members.push_back(std::countr_zero(b));
    auto l = lub(p, members);
    fam.masks_.push_back(mask);
    fam.lubs_.push_back(l ? *l : -1);
  }
  return fam;
}

bool DirectedFamily::way_below(int a, int b) const {
  for (std::size_t k = 0; k < masks_.size(); ++k) {
    const int l = lubs_[k];
    if (l < 0 || !poset_->le(b, l)) continue;
    if ((masks_[k] & up_[static_cast<std::size_t>(a)]) == 0) return false;
  }
  return true;
}

std::vector<int> DirectedFamily::finite_elements() const {
  std::vector<int> result;
  for (int i = 0; i < static_cast<int>(poset_->size()); ++i)
    if (way_below(i, i)) result.push_back(i);
  return result;
}

bool way_below(const Poset& p, int a, int b, const Caps& caps) {
  return DirectedFamily::enumerate(p, caps).way_below(a, b);
}

bool way_below(const Poset& p, std::string_view a, std::string_view b, const Caps& caps) {
  return way_below(p, p.index(a), p.index(b), caps);
}

bool is_complete_lattice(const Poset& p, const Caps& caps) {
  const std::size_t n = checked_size(p.size(), caps);
  if (n == 0) return false;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<int> members;
    for (std::uint32_t b = mask; b; b &= b - 1) members.push_back(std::countr_zero(b));
    if (!lub(p, members)) return false;
  }
  return true;
}

bool complete_via_directed(const Poset& p, const Caps& caps) {
  if (p.size() == 0) return false;
  if (!p.bottom()) return false;
  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!lub(p, std::vector<int>{a, b})) return false;
  const auto fam = DirectedFamily::enumerate(p, caps);
  for (int l : fam.lubs())
    if (l < 0) return false;
  return true;
}

bool is_continuous_lattice(const Poset& p, const Caps& caps) {
  if (!is_complete_lattice(p, caps)) return false;
  const auto fam = DirectedFamily::enumerate(p, caps);
  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a) {
    std::vector<int> below;
    for (int b = 0; b < n; ++b)
      if (fam.way_below(b, a)) below.push_back(b);
    auto l = lub(p, below);
    if (!l || *l != a) return false;
  }
  return true;
}

bool is_algebraic_lattice(const Poset& p, const Caps& caps) {
  if (!is_complete_lattice(p, caps)) return false;
  const auto fam = DirectedFamily::enumerate(p, caps);
  const auto fin = fam.finite_elements();
  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a) {
    std::vector<int> witnesses;
    for (int b : fin)
      if (p.le(b, a)) witnesses.push_back(b);
    auto l = lub(p, witnesses);
    if (!l || *l != a) return false;
  }
  return true;
}

FiniteLattice FiniteLattice::from_poset(Poset p) {
  FiniteLattice lat;
  const int n = static_cast<int>(p.size());
  lat.join_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  lat.meet_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto j = lub(p, std::vector<int>{a, b});
      require(j.has_value(), "no join for '" + p.name(a) + "' and '" + p.name(b) + "'");
      lat.join_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = *j;
      // meet = lub in the dual order: greatest lower bound.
      std::vector<int> lowers;
      for (int u = 0; u < n; ++u)
        if (p.le(u, a) && p.le(u, b)) lowers.push_back(u);
      int glb = -1;
      for (int l0 : lowers) {
        bool greatest = true;
        for (int l : lowers)
          if (!p.le(l, l0)) { greatest = false; break; }
        if (greatest) { glb = l0; break; }
      }
      require(glb >= 0, "no meet for '" + p.name(a) + "' and '" + p.name(b) + "'");
      lat.meet_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = glb;
    }
  }
  auto t = p.top();
  auto b = p.bottom();
  require(n == 0 || (t && b), "lattice lacks a top or bottom element");
  lat.top_ = t ? *t : -1;
  lat.bottom_ = b ? *b : -1;
  lat.poset_ = std::move(p);
  return lat;
}

FiniteLattice FiniteLattice::from_tables(Poset p,
                                         std::vector<std::vector<int>> join,
                                         std::vector<std::vector<int>> meet) {
  FiniteLattice computed = from_poset(std::move(p));
  require(join == computed.join_, "supplied join table disagrees with the order");
  require(meet == computed.meet_, "supplied meet table disagrees with the order");
  return computed;
}

FiniteLattice product_lattice(const FiniteLattice& d, const FiniteLattice& e) {
  const int nd = static_cast<int>(d.size());
  const int ne = static_cast<int>(e.size());
  std::vector<std::string> elements;
  elements.reserve(static_cast<std::size_t>(nd * ne));
  for (int a = 0; a < nd; ++a)
    for (int b = 0; b < ne; ++b)
      elements.push_back("(" + d.name(a) + "," + e.name(b) + ")");
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(nd * ne),
                                     std::vector<bool>(static_cast<std::size_t>(nd * ne), false));
  auto idx = [ne](int a, int b) { return static_cast<std::size_t>(a * ne + b); };
  for (int a = 0; a < nd; ++a)
    for (int b = 0; b < ne; ++b)
      for (int a2 = 0; a2 < nd; ++a2)
        for (int b2 = 0; b2 < ne; ++b2)
          leq[idx(a, b)][idx(a2, b2)] = d.le(a, a2) && e.le(b, b2);
  return FiniteLattice::from_poset(Poset::from_leq_matrix(std::move(elements), std::move(leq)));
}

FiniteLattice chain_lattice(int n, const std::string& prefix) {
  require(n >= 1, "chain needs at least one element");
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) elements.push_back(prefix + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(i + 1)]);
  return FiniteLattice::from_poset(Poset(std::move(elements), pairs));
}

std::string set_name(const std::vector<std::string>& members) {
  std::vector<std::string> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ",";
    out += sorted[i];
  }
  out += "}";
  return out;
}

FiniteLattice powerset_lattice(const std::vector<std::string>& ground) {
  const std::size_t k = ground.size();
  require(k <= 16, "powerset lattice ground set too large");
  const std::uint32_t total = 1u << k;
  std::vector<std::string> elements;
  elements.reserve(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::string> members;
    for (std::uint32_t b = mask; b; b &= b - 1) members.push_back(ground[static_cast<std::size_t>(std::countr_zero(b))]);
    elements.push_back(set_name(members));
  }
  std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, false));
  for (std::uint32_t a = 0; a < total; ++a)
    for (std::uint32_t b = 0; b < total; ++b)
      leq[a][b] = (a & ~b) == 0;
  return FiniteLattice::from_poset(Poset::from_leq_matrix(std::move(elements), std::move(leq)));
}

}  // namespace infalg
