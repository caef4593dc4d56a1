#pragma once

#include "pcert/multipoly.hpp"
#include "pcert/puiseux.hpp"
#include "pcert/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcert {

/// One edge of the Newton polygon of Q(t, Y) = q(center + t, y0 + Y).
///
/// Support points are plotted as (i, v_i) with i the Y-degree and v_i the
/// t-order of the coefficient of Y^i. An edge of the lower hull with slope
/// -mu corresponds to roots Y = c t^mu + ..., so `exponent` = -slope.
/// `polynomial` is sum a_i c^(i - left) over the points on the edge, a_i being
/// the lowest-order coefficient of Q_i; its nonzero roots are the admissible
/// leading coefficients c.
///
/// When Y^k divides Q (the line Y = y0 lies on the curve) the first entry is
/// a vertical edge with no exponent, left = 0, right = k and polynomial c^k.
struct NewtonEdge {
  std::optional<Rational> exponent;
  UniPoly polynomial;
  int left = 0;
  int right = 0;

  /// Slope in the (i, v) plane; only for finite edges.
  Rational slope() const { return -*exponent; }
};

/// Newton polygon of q(center + t, y0 + Y), lower hull edges left to right.
/// q must be bivariate and nonzero.
std::vector<NewtonEdge> newton_polygon_edges(const MultiPoly& q, const Rational& center,
                                             const Rational& y0 = 0);

enum class BranchStatus { exact, truncated, irrational_obstruction };

std::string to_string(BranchStatus s);

/// A truncated branch Y = expansion(t) of V(q) through (center, y0).
///
/// `ramification * multiplicity` counts the roots of q(t, Y) in Y (with
/// multiplicity, over an algebraic closure of the Puiseux field) represented
/// by this entry; summed over a call it equals mult(y0, q(center, Y)).
struct Branch {
  PuiseuxPoly expansion;
  /// Terms with exponent <= attained_precision are correct.
  Rational attained_precision;
  BranchStatus status = BranchStatus::truncated;
  /// ord q(t, expansion); infinite for exact branches.
  Order residual_order;
  Integer ramification = 1;
  int multiplicity = 1;
};

struct ExpansionOptions {
  /// Recursion limit. By default precision * deg_Y(q) + 2, which no branch
  /// can reach: each step raises the exponent by at least 1/deg_Y(q).
  std::optional<long> max_depth;
};

/// Every branch of V(q) through (center, y0), expanded until the residual
/// order exceeds `precision` and all remaining terms have exponent above it.
/// Edge polynomials whose roots are not rational (or lack a rational e-th
/// root under ramification e) yield irrational_obstruction entries holding
/// the rational prefix computed so far.
///
/// Throws PreconditionError if q(center, y0) != 0, q(center, Y) vanishes
/// identically or precision <= 0; std::runtime_error beyond max_depth.
std::vector<Branch> expand_branches(const MultiPoly& q, const Rational& center, const Rational& y0,
                                    const Rational& precision, const ExpansionOptions& options = {});

/// Newton-Hensel lift of the regular branch through (center, y0): the unique
/// power series y0 + sum c_i (t - center)^i with q(t, y) = 0, truncated at
/// degree k. Throws PreconditionError if q(center, y0) != 0 or dq/dY vanishes there.
PuiseuxPoly regular_lift(const MultiPoly& q, const Rational& center, const Rational& y0, unsigned k);

} // namespace pcert
