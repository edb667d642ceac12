#pragma once

#include <vector>

#include "infalg/caps.hpp"
#include "infalg/domain_free.hpp"
#include "infalg/rational.hpp"

namespace infalg {

/// The max-combination algebra on [0,1] with the two-point domain lattice
/// {0,1}: focusing at 1 is the identity, focusing at 0 clamps to 1/2. The
/// carrier is infinite, so the algebra is evaluated in closed form on
/// exact rationals; grid_table materializes an honest finite subalgebra.
class UnitIntervalAlgebra {
public:
  static Rational combine(const Rational& a, const Rational& b);
  /// x must be 0 or 1.
  static Rational focus(const Rational& phi, int x);
  /// a way-below b: a < b, or a = b = 0.
  static bool way_below(const Rational& a, const Rational& b);
  static bool leq(const Rational& a, const Rational& b) { return !(b < a); }

  /// Supremum of {psi : psi = psi focused at x, psi way-below phi},
  /// computed by case analysis on the witness interval (not by reusing the
  /// focusing formula).
  static Rational strong_density_sup(const Rational& phi, int x);

  /// The finite elements: only 0 is way-below itself.
  static std::vector<Rational> finite_element_set() { return {Rational(0, 1)}; }

  /// Classification from the closed forms, re-verified on a sample of
  /// rationals (grid points of /24 plus assorted fractions). Continuous and
  /// strongly continuous, not compact, finite elements {0}.
  static ContinuityReport classify();

  /// Sample points used by classify for re-verification.
  static std::vector<Rational> sample_points();
};

/// A sampled finite subalgebra on the grid {k/n}: combination max, focusing
/// at 0 clamps to 1/2 (which is why n must be even), focusing at 1 is the
/// identity. n must be an even integer >= 2.
DomainFreeAlgebra unit_interval_algebra(int grid_denominator, const Caps& caps = {});

}  // namespace infalg
