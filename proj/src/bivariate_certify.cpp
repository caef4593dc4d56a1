#include "pcert/bivariate_certify.hpp"
#include "pcert/errors.hpp"
#include "pcert/newton_puiseux.hpp"
#include "pcert/resultant.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcert {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::certified:
    return "certified";
  case Verdict::inconclusive:
    return "inconclusive";
  case Verdict::precondition_violated:
    return "precondition-violated";
  }
  return "unknown";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "certified")
    return Verdict::certified;
  if (text == "inconclusive")
    return Verdict::inconclusive;
  if (text == "precondition-violated")
    return Verdict::precondition_violated;
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

std::optional<std::size_t> prefix_index(std::span<const Rational> ladder, const Rational& threshold) {
  std::optional<std::size_t> M;
  for (std::size_t i = 0; i < ladder.size() && ladder[i] <= threshold; ++i)
    M = i;
  return M;
}

namespace {

std::optional<std::string> check_query(const BivariateQuery& q, std::size_t expected) {
  if (q.polynomials.size() != expected)
    return "expected " + std::to_string(expected) + " polynomial(s), got " + std::to_string(q.polynomials.size());
  const std::vector<Rational> xi{q.xi1, q.xi2};
  for (std::size_t j = 0; j < q.polynomials.size(); ++j) {
    const auto& f = q.polynomials[j];
    const std::string name = expected == 1 ? "q" : "f" + std::to_string(j + 1);
    if (f.nvars() != 2)
      return name + " is not bivariate";
    if (f.is_zero())
      return name + " is the zero polynomial";
    if (f.degree_in(1) == 0)
      return name + " has zero degree in X2";
    if (f.evaluate(xi) != 0)
      return name + " does not vanish at xi";
  }
  if (q.theta.center() != q.xi1)
    return "theta is not centered at xi1";
  for (const auto& t : q.theta.terms())
    if (sgn(t.exponent) < 0)
      return "theta has a negative exponent";
  if (q.theta.constant_term() != q.xi2)
    return "theta constant term differs from xi2";
  if (sgn(q.L) < 0)
    return "L is negative";
  return std::nullopt;
}

Order order_at(const MultiPoly& f, const BivariateQuery& q) {
  const std::vector<PuiseuxPoly> arg{PuiseuxPoly::identity(q.xi1), q.theta};
  return substitute(f, arg).order();
}

void finish(PrefixCertificate& cert, const BivariateQuery& q, const Rational& threshold) {
  cert.threshold = threshold;
  cert.M = prefix_index(cert.ladder, threshold);
  cert.certified_prefix = q.theta.truncated(cert.ladder[*cert.M]);
}

RegularRefinement refine(const MultiPoly& f, std::size_t index, const BivariateQuery& q, long K) {
  RegularRefinement r;
  r.K = K;
  r.regular_index = index;
  r.lift = regular_lift(f, q.xi1, q.xi2, static_cast<unsigned>(std::max(K, 0L)));
  r.agrees = q.theta.truncated(Rational(K)) == r.lift.truncated(Rational(K));
  return r;
}

} // namespace

PrefixCertificate lemma_prefix_certificate(const BivariateQuery& query) {
  PrefixCertificate cert;
  cert.kind = kLemmaPrefix;
  cert.L = query.L;
  cert.certified_prefix = PuiseuxPoly(query.xi1);
  if (auto problem = check_query(query, 1)) {
    cert.verdict = Verdict::precondition_violated;
    cert.violation = *problem;
    return cert;
  }
  const MultiPoly& q = query.polynomials.front();
  cert.ladder = exponent_ladder(std::span(&query.theta, 1));
  cert.orders = {order_at(q, query)};
  cert.deg_y = static_cast<int>(q.degree_in(1));
  cert.mult_c = root_multiplicity(leading_y_coefficient(q), query.xi1);
  cert.degree_gate = cert.mult_c;

  if (!(cert.orders[0] > Order(query.L)))
    cert.unmet.push_back("ord(q(t,theta)) > L");
  if (query.L < cert.degree_gate)
    cert.unmet.push_back("L >= mult(xi1, c)");
  if (!cert.unmet.empty()) {
    cert.verdict = Verdict::inconclusive;
    return cert;
  }
  cert.verdict = Verdict::certified;
  finish(cert, query, (query.L - cert.mult_c) / Rational(cert.deg_y));
  return cert;
}

RegularRefinement lemma_regular_refinement(const BivariateQuery& query) {
  const PrefixCertificate cert = lemma_prefix_certificate(query);
  if (cert.verdict != Verdict::certified)
    throw PreconditionError("lemma-hypotheses", "lemma_regular_refinement: lemma does not certify (" +
                                                    to_string(cert.verdict) + ")");
  const MultiPoly& q = query.polynomials.front();
  const std::vector<Rational> xi{query.xi1, query.xi2};
  if (q.partial(1).evaluate(xi) == 0)
    throw PreconditionError("regular-point", "lemma_regular_refinement: dq/dX2 vanishes at xi");
  return refine(q, 0, query, to_long(floor(query.L - cert.mult_c)));
}

PrefixCertificate proposition_common_curve(const BivariateQuery& query) {
  PrefixCertificate cert;
  cert.kind = kCommonCurve;
  cert.L = query.L;
  cert.certified_prefix = PuiseuxPoly(query.xi1);
  if (auto problem = check_query(query, 2)) {
    cert.verdict = Verdict::precondition_violated;
    cert.violation = *problem;
    return cert;
  }
  const MultiPoly& f1 = query.polynomials[0];
  const MultiPoly& f2 = query.polynomials[1];
  cert.ladder = exponent_ladder(std::span(&query.theta, 1));
  cert.orders = vanishing_order_profile(query.polynomials,
                                       PuiseuxVector::make({PuiseuxPoly::identity(query.xi1), query.theta}));
  cert.d11 = static_cast<int>(f1.degree_in(0));
  cert.d21 = static_cast<int>(f1.degree_in(1));
  cert.d12 = static_cast<int>(f2.degree_in(0));
  cert.d22 = static_cast<int>(f2.degree_in(1));
  cert.degree_gate = cert.d11 * cert.d22 + cert.d12 * cert.d21;

  for (std::size_t j = 0; j < 2; ++j)
    if (!(cert.orders[j] > Order(query.L)))
      cert.unmet.push_back("ord(f" + std::to_string(j + 1) + "(t,theta)) > L");
  if (query.L < cert.degree_gate)
    cert.unmet.push_back("L >= d11*d22 + d12*d21");
  if (!cert.unmet.empty()) {
    cert.verdict = Verdict::inconclusive;
    return cert;
  }
  cert.verdict = Verdict::certified;
  const Rational threshold = (query.L - cert.degree_gate - std::min(cert.d11, cert.d12)) /
                                 Rational(std::min(cert.d21, cert.d22)) +
                             (cert.d11 + cert.d12);
  finish(cert, query, threshold);
  return cert;
}

RegularRefinement proposition_regular_refinement(const BivariateQuery& query) {
  const PrefixCertificate cert = proposition_common_curve(query);
  if (cert.verdict != Verdict::certified)
    throw PreconditionError("proposition-hypotheses", "proposition_regular_refinement: proposition does not certify (" +
                                                          to_string(cert.verdict) + ")");
  const std::vector<Rational> xi{query.xi1, query.xi2};
  for (std::size_t j = 0; j < 2; ++j) {
    const MultiPoly& f = query.polynomials[j];
    if (f.partial(1).evaluate(xi) != 0)
      return refine(f, j, query, to_long(floor(query.L)) - std::min(cert.d11, cert.d12));
  }
  throw PreconditionError("regular-point", "proposition_regular_refinement: df_j/dX2 vanishes at xi for j = 1, 2");
}

AuditResult audit_prefix_certificate(const PrefixCertificate& cert, const BivariateQuery& query) {
  PrefixCertificate fresh;
  if (cert.kind == kLemmaPrefix)
    fresh = lemma_prefix_certificate(query);
  else if (cert.kind == kCommonCurve)
    fresh = proposition_common_curve(query);
  else
    return AuditResult::fail("kind");

  if (cert.L != fresh.L)
    return AuditResult::fail("L");
  if (cert.verdict != fresh.verdict)
    return AuditResult::fail("verdict");
  if (cert.violation != fresh.violation)
    return AuditResult::fail("violation");
  if (cert.orders != fresh.orders)
    return AuditResult::fail("orders");
  if (cert.ladder != fresh.ladder)
    return AuditResult::fail("ladder");
  if (cert.deg_y != fresh.deg_y || cert.mult_c != fresh.mult_c)
    return AuditResult::fail(cert.deg_y != fresh.deg_y ? "deg_y" : "mult_c");
  if (cert.d11 != fresh.d11 || cert.d12 != fresh.d12 || cert.d21 != fresh.d21 || cert.d22 != fresh.d22)
    return AuditResult::fail("degrees");
  if (cert.degree_gate != fresh.degree_gate)
    return AuditResult::fail("degree_gate");
  if (cert.unmet != fresh.unmet)
    return AuditResult::fail("unmet");
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
    if (cert.L < cert.degree_gate)
      return AuditResult::fail("degree_gate");
    if (!cert.M || !cert.threshold || cert.ladder[*cert.M] > *cert.threshold ||
        (*cert.M + 1 < cert.ladder.size() && cert.ladder[*cert.M + 1] <= *cert.threshold))
      return AuditResult::fail("M");
  }

  if (cert.refinement) {
    RegularRefinement r;
    try {
      r = cert.kind == kLemmaPrefix ? lemma_regular_refinement(query) : proposition_regular_refinement(query);
    } catch (const PreconditionError&) {
      return AuditResult::fail("refinement");
    }
    const auto& s = *cert.refinement;
    if (s.K != r.K || s.regular_index != r.regular_index || s.lift != r.lift || s.agrees != r.agrees)
      return AuditResult::fail("refinement");
  }
  return AuditResult::pass();
}

} // namespace pcert
