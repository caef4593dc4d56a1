#pragma once

#include "pcert/multipoly.hpp"
#include "pcert/newton_puiseux.hpp"
#include "pcert/puiseux.hpp"

#include <optional>
#include <random>

namespace pcert {

/// Random bivariate polynomial of total degree <= max_degree with integer
/// coefficients in [-coeff_bound, coeff_bound]. Can be zero.
MultiPoly random_bivariate(std::mt19937_64& rng, int max_degree, int coeff_bound);

/// f1 = g*h1, f2 = g*h2 with g(xi) = 0, deg_{X2} g > 0 and g(xi1, X2) != 0.
struct CommonFactorPair {
  MultiPoly g, h1, h2, f1, f2;
  Rational xi1, xi2;
};
CommonFactorPair random_common_factor_pair(std::mt19937_64& rng, int max_degree = 3, int coeff_bound = 3);

/// q with q(0, y0) = 0 and q(0, X2) != 0, total degree <= max_degree.
struct RootedPolynomial {
  MultiPoly q;
  Rational y0;
};
RootedPolynomial random_rooted_polynomial(std::mt19937_64& rng, int max_degree = 4, int coeff_bound = 3);

/// Rational expansions of V(g) through (xi1, xi2), correct through
/// `precision`: the Newton-Hensel lift when dg/dX2 does not vanish there,
/// otherwise every Newton-Puiseux branch that is not obstructed.
std::vector<PuiseuxPoly> rational_branches(const MultiPoly& g, const Rational& xi1, const Rational& xi2,
                                           const Rational& precision);

/// True when a and b agree on every exponent <= bound, allowing the real
/// conjugation t^(1/e) -> -t^(1/e) when e is even.
bool agree_up_to_conjugation(const PuiseuxPoly& a, const PuiseuxPoly& b, const Rational& bound, const Integer& e);

} // namespace pcert
