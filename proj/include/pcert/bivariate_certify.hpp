#pragma once

#include "pcert/certificate.hpp"
#include "pcert/multipoly.hpp"
#include "pcert/puiseux.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcert {

/// A bivariate certification request: one polynomial q (prefix lemma) or a
/// pair f1, f2 (common curve), a common zero (xi1, xi2) and the X2-component
/// theta = sum a_i (t - xi1)^{g_i} with a_0 = xi2.
struct BivariateQuery {
  std::vector<MultiPoly> polynomials;
  Rational xi1;
  Rational xi2;
  PuiseuxPoly theta;
  Rational L;
};

/// Integer exponents of theta up to K agree with the regular branch.
struct RegularRefinement {
  long K = 0;
  /// Index of the polynomial whose regular branch was lifted.
  std::size_t regular_index = 0;
  PuiseuxPoly lift;
  bool agrees = false;
};

struct PrefixCertificate {
  /// "lemma-prefix" or "common-curve".
  std::string kind;
  Verdict verdict = Verdict::inconclusive;
  /// Violated invariant when verdict is precondition_violated.
  std::string violation;
  /// Hypotheses that failed when verdict is inconclusive.
  std::vector<std::string> unmet;

  Rational L;
  std::vector<Order> orders;
  std::vector<Rational> ladder;

  // Lemma data: deg_Y(q) and mult(xi1, c), c the leading X2-coefficient.
  int deg_y = 0;
  int mult_c = 0;
  // Common-curve data: d_ij = deg_{X_i}(f_j).
  int d11 = 0, d12 = 0, d21 = 0, d22 = 0;
  /// Lower limit on L: mult_c, or d11*d22 + d12*d21.
  Rational degree_gate;

  std::optional<Rational> threshold;
  std::optional<std::size_t> M;
  PuiseuxPoly certified_prefix;
  std::optional<RegularRefinement> refinement;
};

inline constexpr const char* kLemmaPrefix = "lemma-prefix";
inline constexpr const char* kCommonCurve = "common-curve";

/// Certified iff ord q(t, theta) > L and L >= mult(xi1, c); then theta is the
/// beginning of a branch of V(q) through xi up to the last exponent
/// <= (L - mult(xi1, c)) / deg_Y(q).
PrefixCertificate lemma_prefix_certificate(const BivariateQuery& query);

/// Regular case: when dq/dX2(xi) != 0 the certified agreement extends to all
/// integer exponents <= L - mult(xi1, c). Throws PreconditionError when the
/// lemma does not certify or the point is singular.
RegularRefinement lemma_regular_refinement(const BivariateQuery& query);

/// Certified iff ord f_j(t, theta) > L for j = 1, 2 and L >= d11*d22 + d12*d21;
/// then f1, f2 share a curve through xi whose parametrization starts with theta
/// up to the last exponent <= (L - D - min(d11,d12)) / min(d21,d22) + d11 + d12.
PrefixCertificate proposition_common_curve(const BivariateQuery& query);

/// K = floor(L) - min(d11, d12) when some f_j is regular in X2 at xi. Throws
/// PreconditionError when the proposition does not certify or both partials vanish.
RegularRefinement proposition_regular_refinement(const BivariateQuery& query);

/// Recomputes every stored quantity of a lemma or common-curve certificate.
AuditResult audit_prefix_certificate(const PrefixCertificate& cert, const BivariateQuery& query);

} // namespace pcert
