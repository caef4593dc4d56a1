#include "pcert/multivar_certify.hpp"

namespace pcert {

namespace {

std::optional<std::string> check_query(const SystemQuery& q, bool curve) {
  if (q.system.empty())
    return "empty system";
  const std::size_t n = q.point.size();
  if (n == 0)
    return "empty point";
  for (std::size_t j = 0; j < q.system.size(); ++j)
    if (q.system[j].nvars() != n)
      return "f" + std::to_string(j + 1) + " has " + std::to_string(q.system[j].nvars()) +
             " variables, point has " + std::to_string(n);
  if (q.theta.size() != n)
    return "theta has " + std::to_string(q.theta.size()) + " components, expected " + std::to_string(n);
  if (auto problem = PuiseuxVector::check(q.theta, std::span<const Rational>(q.point)))
    return problem;
  for (std::size_t j = 0; j < q.system.size(); ++j)
    if (q.system[j].evaluate(q.point) != 0)
      return "f" + std::to_string(j + 1) + " does not vanish at xi";
  if (q.noether_bound.value < 1)
    return "noether bound must be >= 1";
  if (q.degree_bound && q.degree_bound->value < 1)
    return "degree bound must be >= 1";
  if (sgn(q.L) < 0)
    return "L is negative";
  if (curve && !q.dim1_asserted)
    return "curve prefix requires the dim V(f) <= 1 assertion";
  if (curve && !q.degree_bound)
    return "curve prefix requires a degree bound";
  return std::nullopt;
}

SystemCertificate run(const SystemQuery& query, bool curve) {
  SystemCertificate cert;
  cert.kind = curve ? kCurvePrefix : kNonIsolation;
  cert.L = query.L;
  cert.noether_bound = query.noether_bound;
  cert.degree_bound = query.degree_bound;
  cert.dim1_asserted = query.dim1_asserted;
  if (auto problem = check_query(query, curve)) {
    cert.verdict = Verdict::precondition_violated;
    cert.violation = *problem;
    return cert;
  }
  const PuiseuxVector theta = PuiseuxVector::make(query.theta, std::span<const Rational>(query.point));
  cert.orders = vanishing_order_profile(query.system, theta);
  for (std::size_t j = 0; j < cert.orders.size(); ++j)
    if (!(cert.orders[j] > Order(query.L)))
      cert.unmet.push_back("ord(f" + std::to_string(j + 1) + "(Theta)) > L");

  Rational gate(query.noether_bound.value);
  if (curve)
    gate *= Rational(query.degree_bound->value);
  if (query.L < gate)
    cert.unmet.push_back(curve ? "L >= noether_bound * degree_bound" : "L >= noether_bound");
  if (curve)
    cert.ladder = theta.ladder();
  if (!cert.unmet.empty()) {
    cert.verdict = Verdict::inconclusive;
    return cert;
  }
  cert.verdict = Verdict::certified;
  if (!curve) {
    cert.statement = "xi lies on an irreducible component of V(f) with free variable X1";
    return cert;
  }
  cert.threshold = query.L / gate;
  cert.M = prefix_index(cert.ladder, *cert.threshold);
  cert.certified_prefix = theta.truncated(cert.ladder[*cert.M]).components();
  cert.statement = "assuming dim V(f) <= 1, a curve of V(f) through xi has a parametrization beginning with "
                   "the certified prefix";
  return cert;
}

} // namespace

SystemCertificate certify_nonisolated(const SystemQuery& query) { return run(query, false); }

SystemCertificate certify_curve_prefix(const SystemQuery& query) { return run(query, true); }

AuditResult audit_certificate(const SystemCertificate& cert, const SystemQuery& query) {
  SystemCertificate fresh;
  if (cert.kind == kNonIsolation)
    fresh = certify_nonisolated(query);
  else if (cert.kind == kCurvePrefix)
    fresh = certify_curve_prefix(query);
  else
    return AuditResult::fail("kind");

  if (cert.L != fresh.L)
    return AuditResult::fail("L");
  if (cert.noether_bound != fresh.noether_bound)
    return AuditResult::fail("noether_bound");
  if (cert.degree_bound != fresh.degree_bound)
    return AuditResult::fail("degree_bound");
  if (cert.dim1_asserted != fresh.dim1_asserted)
    return AuditResult::fail("dim1_asserted");
  if (cert.verdict != fresh.verdict)
    return AuditResult::fail("verdict");
  if (cert.violation != fresh.violation)
    return AuditResult::fail("violation");
  if (cert.orders != fresh.orders)
    return AuditResult::fail("orders");
  if (cert.unmet != fresh.unmet)
    return AuditResult::fail("unmet");
  if (cert.statement != fresh.statement)
    return AuditResult::fail("statement");
  if (cert.ladder != fresh.ladder)
    return AuditResult::fail("ladder");
  if (cert.threshold != fresh.threshold)
    return AuditResult::fail("threshold");
  if (cert.M != fresh.M)
    return AuditResult::fail("M");
  if (cert.certified_prefix != fresh.certified_prefix)
    return AuditResult::fail("certified_prefix");

  // Soundness gate, read from the stored fields alone.
  if (cert.verdict == Verdict::certified) {
    for (const auto& o : cert.orders)
      if (!(o > Order(cert.L)))
        return AuditResult::fail("orders");
    Rational gate(cert.noether_bound.value);
    if (cert.kind == kCurvePrefix) {
      if (!cert.degree_bound || !cert.dim1_asserted)
        return AuditResult::fail("degree_bound");
      gate *= Rational(cert.degree_bound->value);
      if (!cert.threshold || *cert.threshold != cert.L / gate)
        return AuditResult::fail("threshold");
      if (!cert.M || prefix_index(cert.ladder, *cert.threshold) != cert.M)
        return AuditResult::fail("M");
    }
    if (cert.L < gate)
      return AuditResult::fail("L");
  }
  return AuditResult::pass();
}

} // namespace pcert
