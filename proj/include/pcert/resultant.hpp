#pragma once

#include "pcert/multipoly.hpp"
#include "pcert/unipoly.hpp"

#include <optional>
#include <vector>

namespace pcert {

/// A bivariate polynomial viewed in Q[X1][X2]: entry k is the coefficient of
/// X2^k, a polynomial in X1. No trailing zero entries.
using PolyInY = std::vector<UniPoly>;

PolyInY to_poly_in_y(const MultiPoly& f);
MultiPoly from_poly_in_y(const PolyInY& p);

/// Leading coefficient of f as a polynomial in X2 over Q[X1].
UniPoly leading_y_coefficient(const MultiPoly& f);

/// Res_{X2}(f, g) in Q[X1] by the subresultant remainder sequence with
/// content removal. Both inputs must be bivariate with positive X2-degree.
UniPoly resultant_y(const MultiPoly& f, const MultiPoly& g);

/// Same resultant as the determinant of the Sylvester matrix, computed with
/// fraction-free (Bareiss) elimination over Q[X1].
UniPoly resultant_y_sylvester(const MultiPoly& f, const MultiPoly& g);

/// gcd in Q[X1, X2], normalized to coprime integer coefficients with a
/// positive leading coefficient under lex order X2 > X1.
MultiPoly gcd_bivariate(const MultiPoly& f, const MultiPoly& g);

/// f / g when g divides f exactly in Q[X1, X2].
std::optional<MultiPoly> divide_bivariate(const MultiPoly& f, const MultiPoly& g);

/// Scales a nonzero bivariate polynomial to the gcd normal form above.
MultiPoly normalize_bivariate(const MultiPoly& f);

} // namespace pcert
