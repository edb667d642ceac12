#include "infalg/instances/unit_interval.hpp"

#include <algorithm>

namespace infalg {

namespace {

const Rational kZero(0, 1);
const Rational kHalf(1, 2);
const Rational kOne(1, 1);

void check_domain_point(int x) {
  if (x != 0 && x != 1) throw contract_error("domain point must be 0 or 1");
}

void check_unit(const Rational& v) {
  if (v < kZero || kOne < v)
    throw malformed_error("value " + v.str() + " outside [0,1]");
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw malformed_error("cannot parse rational '" + text + "'");
  }
}

Rational UnitIntervalAlgebra::combine(const Rational& a, const Rational& b) {
  check_unit(a);
  check_unit(b);
  return max(a, b);
}

Rational UnitIntervalAlgebra::focus(const Rational& phi, int x) {
  check_unit(phi);
  check_domain_point(x);
  if (x == 1) return phi;
  return min(phi, kHalf);
}

bool UnitIntervalAlgebra::way_below(const Rational& a, const Rational& b) {
  check_unit(a);
  check_unit(b);
  return a < b || (a == kZero && b == kZero);
}

Rational UnitIntervalAlgebra::strong_density_sup(const Rational& phi, int x) {
  check_unit(phi);
  check_domain_point(x);
  if (x == 1) {
    // Witnesses are all psi way-below phi; their sup is phi (attained at 0
    // when phi = 0, as the limit of [0, phi) otherwise).
    return phi;
  }
  // Witnesses are {psi <= 1/2 : psi way-below phi}.
  if (phi == kZero) return kZero;  // {0}
  if (leq(phi, kHalf)) return phi; // [0, phi), sup = phi
  return kHalf;                    // [0, 1/2], attained at 1/2 < phi
}

std::vector<Rational> UnitIntervalAlgebra::sample_points() {
  std::vector<Rational> samples;
  for (int k = 0; k <= 24; ++k) samples.emplace_back(k, 24);
  samples.emplace_back(7, 10);
  samples.emplace_back(3, 10);
  samples.emplace_back(1, 3);
  samples.emplace_back(2, 3);
  samples.emplace_back(5, 7);
  samples.emplace_back(1, 100);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  return samples;
}

ContinuityReport UnitIntervalAlgebra::classify() {
  ContinuityReport report;
  const auto samples = sample_points();

  // Complete lattice: every subset of [0,1] has a sup. Continuity: each
  // phi > 0 is the sup of [0, phi), and 0 is way-below itself. The closed
  // forms are cross-checked on the samples: every sampled witness must lie
  // below the claimed sup, and the sup must not exceed phi.
  report.continuous = true;
  for (const auto& phi : samples) {
    const Rational sup = strong_density_sup(phi, 1);
    bool ok = sup == phi;
    for (const auto& psi : samples)
      if (way_below(psi, phi) && !leq(psi, sup)) ok = false;
    if (!ok) {
      report.continuous = false;
      report.witness_failures.emplace_back("continuous", phi.str());
      break;
    }
  }

  // Strong continuity: the focused density identity, by cases at x = 0.
  report.s_continuous = true;
  for (const auto& phi : samples) {
    for (int x = 0; x <= 1; ++x) {
      const Rational sup = strong_density_sup(phi, x);
      bool ok = sup == focus(phi, x) && leq(sup, phi);
      for (const auto& psi : samples)
        if (focus(psi, x) == psi && way_below(psi, phi) && !leq(psi, sup)) ok = false;
      if (!ok) {
        report.s_continuous = false;
        report.witness_failures.emplace_back("s_continuous", phi.str());
        break;
      }
    }
    if (!report.s_continuous) break;
  }

  // Only 0 is way-below itself, so density over finite elements fails for
  // any phi > 0: the witness sup degenerates to 0.
  report.finite_elements.push_back(kZero.str());
  report.compact = true;
  report.s_compact = true;
  for (const auto& phi : samples) {
    if (phi == kZero) continue;
    // sup{psi in finite elements : psi <= phi} = 0 != phi.
    report.compact = false;
    report.s_compact = false;
    report.witness_failures.emplace_back("compact", phi.str());
    report.witness_failures.emplace_back("s_compact", phi.str());
    break;
  }

  return report;
}

DomainFreeAlgebra unit_interval_algebra(int grid_denominator, const Caps& caps) {
  if (grid_denominator < 2 || grid_denominator % 2 != 0)
    throw malformed_error("grid denominator must be an even integer >= 2");
  const std::size_t n = static_cast<std::size_t>(grid_denominator) + 1;
  if (n > caps.max_carrier)
    throw resource_limit_error("grid carrier exceeds the carrier cap");

  std::vector<Rational> points;
  points.reserve(n);
  for (int k = 0; k <= grid_denominator; ++k) points.emplace_back(k, grid_denominator);

  std::vector<std::string> carrier;
  carrier.reserve(n);
  for (const auto& p : points) carrier.push_back(p.str());

  FiniteLattice d = FiniteLattice::from_poset(Poset({"0", "1"}, {{"0", "1"}}));

  auto index_of = [&](const Rational& v) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == v) return static_cast<int>(i);
    throw malformed_error("grid operation left the grid at " + v.str());
  };

  std::vector<std::vector<int>> combine(n, std::vector<int>(n));
  std::vector<std::vector<int>> focus(n, std::vector<int>(2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      combine[i][j] = index_of(UnitIntervalAlgebra::combine(points[i], points[j]));
    focus[i][0] = index_of(UnitIntervalAlgebra::focus(points[i], 0));
    focus[i][1] = index_of(UnitIntervalAlgebra::focus(points[i], 1));
  }

  return DomainFreeAlgebra(std::move(carrier), std::move(d), std::move(combine),
                           std::move(focus), 0);
}

}  // namespace infalg
