#include "infalg/instances/semiring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <unordered_map>

namespace infalg {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw malformed_error(what);
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::vector<int> decode_tuple(std::uint64_t code, std::size_t arity, int domain_size) {
  std::vector<int> tuple(arity, 0);
  for (std::size_t i = arity; i-- > 0;) {
    tuple[i] = static_cast<int>(code % static_cast<std::uint64_t>(domain_size));
    code /= static_cast<std::uint64_t>(domain_size);
  }
  return tuple;
}

std::uint64_t encode_tuple(const std::vector<int>& tuple, int domain_size) {
  std::uint64_t code = 0;
  for (int v : tuple) code = code * static_cast<std::uint64_t>(domain_size) + static_cast<std::uint64_t>(v);
  return code;
}

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SemiringSpec::SemiringSpec(std::vector<std::string> values_, std::vector<std::vector<int>> plus,
                           std::vector<std::vector<int>> times, int zero_, int one_)
    : values(std::move(values_)),
      plus_table(std::move(plus)),
      times_table(std::move(times)),
      zero(zero_),
      one(one_) {
  const int n = static_cast<int>(values.size());
  require(n > 0, "empty semiring");
  {
    std::vector<std::string> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "duplicate semiring value");
  }
  for (const auto* table : {&plus_table, &times_table}) {
    require(static_cast<int>(table->size()) == n, "semiring table has wrong row count");
    for (const auto& row : *table) {
      require(static_cast<int>(row.size()) == n, "semiring table has wrong column count");
      for (int v : row) require(v >= 0 && v < n, "semiring table entry out of range");
    }
  }
  require(zero >= 0 && zero < n && one >= 0 && one < n, "zero/one out of range");

  for (int a = 0; a < n; ++a) {
    require(plus_table[a][zero] == a, "zero is not a unit of plus");
    require(times_table[a][one] == a, "one is not a unit of times");
    require(times_table[a][zero] == zero, "zero is not absorbing for times");
    for (int b = 0; b < n; ++b) {
      require(plus_table[a][b] == plus_table[b][a], "plus not commutative");
      require(times_table[a][b] == times_table[b][a], "times not commutative");
      for (int c = 0; c < n; ++c) {
        require(plus_table[plus_table[a][b]][c] == plus_table[a][plus_table[b][c]],
                "plus not associative");
        require(times_table[times_table[a][b]][c] == times_table[a][times_table[b][c]],
                "times not associative");
        require(times_table[a][plus_table[b][c]] ==
                    plus_table[times_table[a][b]][times_table[a][c]],
                "times does not distribute over plus");
      }
    }
  }
}

int SemiringSpec::index(std::string_view id) const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == id) return static_cast<int>(i);
  throw malformed_error("unknown semiring value '" + std::string(id) + "'");
}

SemiringGates semiring_gates(const SemiringSpec& s) {
  SemiringGates gates;
  const int n = static_cast<int>(s.size());
  gates.is_c_semiring = true;
  for (int a = 0; a < n; ++a)
    if (s.plus(a, s.one) != s.one) { gates.is_c_semiring = false; break; }
  gates.has_absorption = true;
  for (int a = 0; a < n && gates.has_absorption; ++a)
    for (int b = 0; b < n; ++b)
      if (s.times(a, s.plus(a, b)) != a) { gates.has_absorption = false; break; }
  return gates;
}

SemiringSpec boolean_semiring() {
  return SemiringSpec({"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
}

SemiringSpec fuzzy_semiring() {
  // Values 0 < 1/2 < 1; plus = max, times = min.
  return SemiringSpec({"0", "1/2", "1"},
                      {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},
                      {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
                      0, 2);
}

SemiringSpec truncated_minplus_semiring() {
  // Values 0, 1, inf; plus = min (inf greatest), times = saturating sum.
  const int INF = 2;
  std::vector<std::vector<int>> plus(3, std::vector<int>(3));
  std::vector<std::vector<int>> times(3, std::vector<int>(3));
  auto numeric = [&](int a, int b, bool add) {
    if (add) return std::min(a, b);
    if (a == INF || b == INF) return INF;
    const int sum = a + b;
    return sum > 1 ? INF : sum;
  };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      plus[a][b] = numeric(a, b, true);
      times[a][b] = numeric(a, b, false);
    }
  return SemiringSpec({"0", "1", "inf"}, std::move(plus), std::move(times), INF, 0);
}

std::vector<int> tuple_project(const std::vector<int>& tuple,
                               const std::vector<std::string>& scope,
                               const std::vector<std::string>& sub) {
  require(tuple.size() == scope.size(), "tuple arity does not match scope");
  std::vector<int> out;
  out.reserve(sub.size());
  for (const auto& v : sub) {
    auto it = std::find(scope.begin(), scope.end(), v);
    require(it != scope.end(), "variable '" + v + "' not in scope");
    out.push_back(tuple[static_cast<std::size_t>(it - scope.begin())]);
  }
  return out;
}

Constraint constraint_combine(const Constraint& c1, const Constraint& c2, const SemiringSpec& s,
                              int domain_size) {
  Constraint out;
  out.scope = sorted_union(c1.scope, c2.scope);
  const std::uint64_t rows = ipow(static_cast<std::uint64_t>(domain_size), out.scope.size());
  out.table.reserve(rows);
  for (std::uint64_t code = 0; code < rows; ++code) {
    const auto tuple = decode_tuple(code, out.scope.size(), domain_size);
    const auto t1 = tuple_project(tuple, out.scope, c1.scope);
    const auto t2 = tuple_project(tuple, out.scope, c2.scope);
    const int v1 = c1.table[static_cast<std::size_t>(encode_tuple(t1, domain_size))];
    const int v2 = c2.table[static_cast<std::size_t>(encode_tuple(t2, domain_size))];
    out.table.push_back(s.times(v1, v2));
  }
  return out;
}

Constraint constraint_project(const Constraint& c, const std::vector<std::string>& sub,
                              const SemiringSpec& s, int domain_size) {
  std::vector<std::string> target = sub;
  std::sort(target.begin(), target.end());
  for (const auto& v : target)
    require(std::find(c.scope.begin(), c.scope.end(), v) != c.scope.end(),
            "projection target '" + v + "' not in scope");

  Constraint out;
  out.scope = target;
  const std::uint64_t rows = ipow(static_cast<std::uint64_t>(domain_size), target.size());
  out.table.assign(rows, -1);
  const std::uint64_t source_rows = ipow(static_cast<std::uint64_t>(domain_size), c.scope.size());
  for (std::uint64_t code = 0; code < source_rows; ++code) {
    const auto tuple = decode_tuple(code, c.scope.size(), domain_size);
    const auto projected = tuple_project(tuple, c.scope, target);
    const std::uint64_t target_code = encode_tuple(projected, domain_size);
    int& cell = out.table[static_cast<std::size_t>(target_code)];
    const int v = c.table[static_cast<std::size_t>(code)];
    cell = cell < 0 ? v : s.plus(cell, v);
  }
  return out;
}

std::string constraint_name(const Constraint& c, const SemiringSpec& s) {
  std::string out = "c(";
  for (std::size_t i = 0; i < c.scope.size(); ++i) {
    if (i) out += ",";
    out += c.scope[i];
  }
  out += ")[";
  for (std::size_t i = 0; i < c.table.size(); ++i) {
    if (i) out += ",";
    out += s.name(c.table[i]);
  }
  out += "]";
  return out;
}

LabeledAlgebra constraint_algebra(const SemiringSpec& s, const std::vector<std::string>& vars,
                                  int domain_size, const Caps& caps) {
  require(domain_size >= 2, "variable domain needs at least two values");
  require(vars.size() <= 4, "too many variables");
  std::vector<std::string> sorted_vars = vars;
  std::sort(sorted_vars.begin(), sorted_vars.end());
  require(std::adjacent_find(sorted_vars.begin(), sorted_vars.end()) == sorted_vars.end(),
          "duplicate variable");

  const std::size_t k = sorted_vars.size();
  const std::uint32_t scopes = 1u << k;

  std::uint64_t carrier_size = 0;
  for (std::uint32_t mask = 0; mask < scopes; ++mask) {
    const std::uint64_t rows = ipow(static_cast<std::uint64_t>(domain_size),
                                    static_cast<std::uint64_t>(std::popcount(mask)));
    carrier_size += ipow(s.size(), rows);
    if (carrier_size > caps.max_carrier)
      throw resource_limit_error("constraint carrier exceeds the carrier cap");
  }

  std::vector<Constraint> all;
  all.reserve(static_cast<std::size_t>(carrier_size));
  std::vector<int> labels;
  for (std::uint32_t mask = 0; mask < scopes; ++mask) {
    std::vector<std::string> scope;
    for (std::uint32_t b = mask; b; b &= b - 1)
      scope.push_back(sorted_vars[static_cast<std::size_t>(std::countr_zero(b))]);
    std::sort(scope.begin(), scope.end());
    const std::uint64_t rows = ipow(static_cast<std::uint64_t>(domain_size), scope.size());
    const std::uint64_t tables = ipow(s.size(), rows);
    for (std::uint64_t t = 0; t < tables; ++t) {
      Constraint c;
      c.scope = scope;
      std::uint64_t code = t;
      c.table.assign(rows, 0);
      for (std::size_t i = rows; i-- > 0;) {
        c.table[i] = static_cast<int>(code % s.size());
        code /= s.size();
      }
      all.push_back(std::move(c));
      labels.push_back(static_cast<int>(mask));
    }
  }

  std::unordered_map<std::string, int> by_name;
  std::vector<std::string> carrier;
  carrier.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    carrier.push_back(constraint_name(all[i], s));
    by_name[carrier.back()] = static_cast<int>(i);
  }

  FiniteLattice lattice = powerset_lattice(sorted_vars);
  // powerset_lattice orders elements by subset mask, matching `labels`.

  const std::size_t n = all.size();
  const std::size_t nd = lattice.size();
  std::vector<std::vector<int>> combine(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Constraint c = constraint_combine(all[i], all[j], s, domain_size);
      combine[i][j] = by_name.at(constraint_name(c, s));
    }

  std::vector<std::vector<int>> marginalize(n, std::vector<int>(nd, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < nd; ++x) {
      const std::uint32_t xmask = static_cast<std::uint32_t>(x);
      const std::uint32_t imask = static_cast<std::uint32_t>(labels[i]);
      if ((xmask & ~imask) != 0) continue;  // target not below the scope
      std::vector<std::string> sub;
      for (std::uint32_t b = xmask; b; b &= b - 1)
        sub.push_back(sorted_vars[static_cast<std::size_t>(std::countr_zero(b))]);
      const Constraint c = constraint_project(all[i], sub, s, domain_size);
      marginalize[i][x] = by_name.at(constraint_name(c, s));
    }

  std::vector<int> neutrals(nd, -1);
  for (std::size_t x = 0; x < nd; ++x) {
    std::vector<std::string> scope;
    for (std::uint32_t b = static_cast<std::uint32_t>(x); b; b &= b - 1)
      scope.push_back(sorted_vars[static_cast<std::size_t>(std::countr_zero(b))]);
    Constraint e;
    e.scope = scope;
    e.table.assign(ipow(static_cast<std::uint64_t>(domain_size), scope.size()), s.one);
    neutrals[x] = by_name.at(constraint_name(e, s));
  }

  std::vector<int> label_idx(n);
  for (std::size_t i = 0; i < n; ++i) label_idx[i] = labels[i];

  return LabeledAlgebra(std::move(carrier), std::move(lattice), std::move(label_idx),
                        std::move(combine), std::move(marginalize), std::move(neutrals));
}

namespace {

SemiringSpec bounded_chain_semiring(int k) {
  std::vector<std::string> values;
  for (int i = 0; i < k; ++i) values.push_back("v" + std::to_string(i));
  std::vector<std::vector<int>> plus(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  std::vector<std::vector<int>> times = plus;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      plus[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::max(a, b);
      times[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a, b);
    }
  return SemiringSpec(std::move(values), std::move(plus), std::move(times), 0, k - 1);
}

SemiringSpec capped_tropical_semiring(int m) {
  // Values 0..m plus inf; plus = min, times = sum saturating to inf above m.
  const int n = m + 2;
  const int INF = n - 1;
  std::vector<std::string> values;
  for (int i = 0; i <= m; ++i) values.push_back(std::to_string(i));
  values.push_back("inf");
  auto add = [&](int a, int b) {
    if (a == INF || b == INF) return INF;
    const int sum = a + b;
    return sum > m ? INF : sum;
  };
  std::vector<std::vector<int>> plus(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::vector<int>> times = plus;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      plus[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a, b);
      times[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = add(a, b);
    }
  return SemiringSpec(std::move(values), std::move(plus), std::move(times), INF, 0);
}

SemiringSpec saturating_arith_semiring(int k) {
  const int n = k + 1;
  std::vector<std::string> values;
  for (int i = 0; i <= k; ++i) values.push_back(std::to_string(i));
  std::vector<std::vector<int>> plus(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::vector<int>> times = plus;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      plus[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a + b, k);
      times[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a * b, k);
    }
  return SemiringSpec(std::move(values), std::move(plus), std::move(times), 0, 1);
}

SemiringSpec product_semiring(const SemiringSpec& a, const SemiringSpec& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  std::vector<std::string> values;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) values.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  auto idx = [nb](int i, int j) { return static_cast<std::size_t>(i * nb + j); };
  const std::size_t n = static_cast<std::size_t>(na * nb);
  std::vector<std::vector<int>> plus(n, std::vector<int>(n));
  std::vector<std::vector<int>> times = plus;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2) {
          plus[idx(i, j)][idx(i2, j2)] = static_cast<int>(idx(a.plus(i, i2), b.plus(j, j2)));
          times[idx(i, j)][idx(i2, j2)] = static_cast<int>(idx(a.times(i, i2), b.times(j, j2)));
        }
  return SemiringSpec(std::move(values), std::move(plus), std::move(times),
                      static_cast<int>(idx(a.zero, b.zero)), static_cast<int>(idx(a.one, b.one)));
}

}  // namespace

std::vector<SemiringSpec> semiring_corpus(int count, std::uint64_t seed) {
  std::vector<SemiringSpec> corpus;
  corpus.push_back(boolean_semiring());
  corpus.push_back(fuzzy_semiring());
  corpus.push_back(truncated_minplus_semiring());
  for (int k = 2; k <= 5; ++k) corpus.push_back(bounded_chain_semiring(k));
  for (int m = 1; m <= 3; ++m) corpus.push_back(capped_tropical_semiring(m));
  for (int k = 1; k <= 3; ++k) corpus.push_back(saturating_arith_semiring(k));
  corpus.push_back(product_semiring(boolean_semiring(), boolean_semiring()));
  corpus.push_back(product_semiring(boolean_semiring(), bounded_chain_semiring(2)));

  // Exhaustive scan of two-element tables, in a seed-shuffled order so the
  // tail of the corpus varies with the seed.
  std::vector<SemiringSpec> found;
  for (std::uint32_t pt = 0; pt < 16; ++pt)
    for (std::uint32_t tt = 0; tt < 16; ++tt)
      for (int zero = 0; zero < 2; ++zero) {
        auto bit = [](std::uint32_t t, int a, int b) {
          return static_cast<int>((t >> (2 * a + b)) & 1u);
        };
        std::vector<std::vector<int>> plus = {{bit(pt, 0, 0), bit(pt, 0, 1)},
                                              {bit(pt, 1, 0), bit(pt, 1, 1)}};
        std::vector<std::vector<int>> times = {{bit(tt, 0, 0), bit(tt, 0, 1)},
                                               {bit(tt, 1, 0), bit(tt, 1, 1)}};
        try {
          found.emplace_back(std::vector<std::string>{"a", "b"}, plus, times, zero, 1 - zero);
        } catch (const malformed_error&) {
        }
      }
  std::mt19937_64 rng(seed);
  std::shuffle(found.begin(), found.end(), rng);
  for (auto& s : found) corpus.push_back(std::move(s));

  while (static_cast<int>(corpus.size()) < count)
    corpus.push_back(bounded_chain_semiring(2 + static_cast<int>(corpus.size()) % 4));
  return corpus;
}

}  // namespace infalg
