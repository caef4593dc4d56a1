#pragma once

#include "pcert/certificate.hpp"
#include "pcert/multipoly.hpp"
#include "pcert/puiseux.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcert {

/// An upper bound fed into a certificate and where it came from: a bound
/// kind name such as "bezout-noether", or "user".
struct BoundValue {
  Integer value = 1;
  std::string source = "user";
  friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

/// System f_1..f_m in n variables, a common zero xi, the series vector
/// Theta = (t, theta_2, ..., theta_n) centered at xi_1 and the precision L.
/// X1 is always the free variable.
struct SystemQuery {
  std::vector<MultiPoly> system;
  std::vector<Rational> point;
  std::vector<PuiseuxPoly> theta;
  Rational L;
  BoundValue noether_bound;
  std::optional<BoundValue> degree_bound;
  /// dim V(f) <= 1, asserted by the caller and not verified.
  bool dim1_asserted = false;
};

struct SystemCertificate {
  /// "non-isolation" or "curve-prefix".
  std::string kind;
  Verdict verdict = Verdict::inconclusive;
  std::string violation;
  std::vector<std::string> unmet;

  Rational L;
  std::vector<Order> orders;
  BoundValue noether_bound;
  std::optional<BoundValue> degree_bound;
  bool dim1_asserted = false;
  std::string statement;

  // Curve-prefix only.
  std::vector<Rational> ladder;
  std::optional<Rational> threshold;
  std::optional<std::size_t> M;
  std::vector<PuiseuxPoly> certified_prefix;
};

inline constexpr const char* kNonIsolation = "non-isolation";
inline constexpr const char* kCurvePrefix = "curve-prefix";

/// Certified iff ord f_j(Theta) > L for every j and L >= the Noether bound:
/// xi then lies on an irreducible component with free variable X1.
SystemCertificate certify_nonisolated(const SystemQuery& query);

/// Additionally requires dim1_asserted and a degree bound; certified iff the
/// orders exceed L and L >= noether * degree. Theta is then the start of a
/// parametrization of a curve through xi up to the last exponent
/// <= L / (noether * degree).
SystemCertificate certify_curve_prefix(const SystemQuery& query);

/// Recomputes orders, verdict, threshold, M and the prefix from the query.
AuditResult audit_certificate(const SystemCertificate& cert, const SystemQuery& query);

} // namespace pcert
