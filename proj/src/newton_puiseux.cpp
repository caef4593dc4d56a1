#include "pcert/newton_puiseux.hpp"
#include "pcert/errors.hpp"

#include <stdexcept>

namespace pcert {

namespace {

/// Coefficients of Y^i of Q(t, Y) = q(center + t, y0 + Y) as series in t.
using SeriesInY = std::vector<PuiseuxPoly>;

MultiPoly recentered(const MultiPoly& q, const Rational& center, const Rational& y0) {
  const MultiPoly t = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const std::vector<MultiPoly> images{MultiPoly::constant(2, center) + t, MultiPoly::constant(2, y0) + y};
  return compose(q, images);
}

SeriesInY to_series_in_y(const MultiPoly& shifted, const Rational& center) {
  SeriesInY out;
  for (const auto& [e, c] : shifted.terms()) {
    if (out.size() <= e[1])
      out.resize(e[1] + 1, PuiseuxPoly(center));
    out[e[1]] += PuiseuxPoly::monomial(center, c, e[0]);
  }
  return out;
}

struct HullVertex {
  int i;
  Rational v;
};

/// Lower convex hull of (i, ord Q_i) over the nonzero coefficients, with
/// collinear points removed so every hull segment is a maximal edge.
std::vector<HullVertex> lower_hull(const SeriesInY& Q) {
  std::vector<HullVertex> hull;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    if (Q[i].is_zero())
      continue;
    HullVertex p{static_cast<int>(i), Q[i].order().value()};
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Cross product of (b - a) and (p - a); keep strict left turns only.
      Rational cross = Rational(b.i - a.i) * (p.v - a.v) - (b.v - a.v) * Rational(p.i - a.i);
      if (sgn(cross) > 0)
        break;
      hull.pop_back();
    }
    hull.push_back(std::move(p));
  }
  return hull;
}

std::vector<NewtonEdge> finite_edges(const SeriesInY& Q) {
  const auto hull = lower_hull(Q);
  std::vector<NewtonEdge> edges;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const auto& a = hull[h];
    const auto& b = hull[h + 1];
    // The segment has slope (v_b - v_a)/(b - a) = -mu; roots start with c t^mu.
    const Rational mu = (a.v - b.v) / Rational(b.i - a.i);
    std::vector<Rational> coeffs(static_cast<std::size_t>(b.i - a.i + 1));
    for (int i = a.i; i <= b.i; ++i) {
      const auto& s = Q[static_cast<std::size_t>(i)];
      if (s.is_zero())
        continue;
      const Rational& lowest = s.terms().front().exponent;
      if (lowest == a.v - mu * (i - a.i))
        coeffs[static_cast<std::size_t>(i - a.i)] = s.terms().front().coefficient;
    }
    edges.push_back({mu, UniPoly(std::move(coeffs)), a.i, b.i});
  }
  return edges;
}

/// Q(s + Y) for a monomial series s.
SeriesInY shift(const SeriesInY& Q, const PuiseuxPoly& s) {
  const std::size_t n = Q.size();
  std::vector<PuiseuxPoly> spow{PuiseuxPoly::constant(s.center(), 1)};
  for (std::size_t k = 1; k < n; ++k)
    spow.push_back(spow.back() * s);
  SeriesInY out(n, PuiseuxPoly(s.center()));
  // Pascal row updated in place per i.
  std::vector<Integer> binom;
  for (std::size_t i = 0; i < n; ++i) {
    binom.push_back(1);
    for (std::size_t j = binom.size() - 1; j-- > 1;)
      binom[j] += binom[j - 1];
    if (Q[i].is_zero())
      continue;
    for (std::size_t j = 0; j <= i; ++j)
      out[j] += Rational(binom[j]) * (Q[i] * spow[i - j]);
  }
  while (!out.empty() && out.back().is_zero())
    out.pop_back();
  return out;
}

class Expander {
public:
  Expander(const MultiPoly& q, const Rational& center, const Rational& y0, const Rational& precision,
           const ExpansionOptions& options)
      : q_(q), center_(center), y0_(y0), precision_(precision),
        max_depth_(options.max_depth.value_or(to_long(ceil(precision)) * q.degree_in(1) + 2)) {}

  std::vector<Branch> run() {
    const SeriesInY Q = to_series_in_y(recentered(q_, center_, y0_), center_);
    expand(Q, PuiseuxPoly(center_), Rational(0), Integer(1), 0);
    return std::move(out_);
  }

private:
  void expand(const SeriesInY& Q, const PuiseuxPoly& prefix, const Rational& last, const Integer& E, long depth) {
    if (depth > max_depth_)
      throw std::runtime_error("Newton-Puiseux recursion exceeded depth " + std::to_string(max_depth_));
    std::size_t k = 0;
    while (k < Q.size() && Q[k].is_zero())
      ++k;
    if (k > 0)
      emit(prefix, BranchStatus::exact, precision_, E, static_cast<int>(k));
    const SeriesInY R(Q.begin() + static_cast<long>(k), Q.end());
    if (R.size() <= 1)
      return;

    int beyond = 0;
    std::vector<NewtonEdge> pending;
    for (auto& edge : finite_edges(R)) {
      if (*edge.exponent <= last)
        continue;
      if (*edge.exponent > precision_)
        beyond += edge.right - edge.left;
      else
        pending.push_back(std::move(edge));
    }
    // Roots whose next term lies beyond the precision share this prefix.
    if (beyond > 0)
      emit(prefix, BranchStatus::truncated, precision_, E, beyond);

    for (const auto& edge : pending) {
      const Rational& mu = *edge.exponent;
      const Rational scaled = mu * E;
      const Integer e_new = scaled.get_den();
      const unsigned long step = e_new.get_ui();
      // Points on the edge are spaced by the new ramification, so the edge
      // polynomial is Psi(c^e_new).
      std::vector<Rational> psi_coeffs;
      for (std::size_t j = 0; j < edge.polynomial.coefficients().size(); j += step)
        psi_coeffs.push_back(edge.polynomial.coefficient(j));
      const UniPoly psi(std::move(psi_coeffs));
      int accounted = 0;
      for (const auto& [z, r] : rational_roots(psi)) {
        accounted += r;
        const auto c = exact_root(z, step);
        if (!c) {
          emit(prefix, BranchStatus::irrational_obstruction, last, E * e_new, r);
          continue;
        }
        const PuiseuxPoly term = PuiseuxPoly::monomial(center_, *c, mu);
        expand(shift(R, term), prefix + term, mu, E * e_new, depth + 1);
      }
      if (accounted < psi.degree())
        emit(prefix, BranchStatus::irrational_obstruction, last, E * e_new, static_cast<int>(psi.degree()) - accounted);
    }
  }

  void emit(const PuiseuxPoly& prefix, BranchStatus status, const Rational& attained, const Integer& E,
            int multiplicity) {
    Branch b;
    b.expansion = PuiseuxPoly::constant(center_, y0_) + prefix;
    const std::vector<PuiseuxPoly> arg{PuiseuxPoly::identity(center_), b.expansion};
    b.residual_order = substitute(q_, arg).order();
    b.status = status;
    b.attained_precision = attained;
    b.ramification = E;
    b.multiplicity = multiplicity;
    out_.push_back(std::move(b));
  }

  const MultiPoly& q_;
  Rational center_;
  Rational y0_;
  Rational precision_;
  long max_depth_;
  std::vector<Branch> out_;
};

void require_bivariate(const MultiPoly& q, const char* who) {
  if (q.nvars() != 2)
    throw PreconditionError("bivariate", std::string(who) + ": polynomial is not bivariate");
  if (q.is_zero())
    throw PreconditionError("nonzero", std::string(who) + ": zero polynomial");
}

} // namespace

std::string to_string(BranchStatus s) {
  switch (s) {
  case BranchStatus::exact:
    return "exact";
  case BranchStatus::truncated:
    return "truncated";
  case BranchStatus::irrational_obstruction:
    return "irrational-obstruction";
  }
  return "unknown";
}

std::vector<NewtonEdge> newton_polygon_edges(const MultiPoly& q, const Rational& center, const Rational& y0) {
  require_bivariate(q, "newton_polygon_edges");
  const SeriesInY Q = to_series_in_y(recentered(q, center, y0), center);
  std::size_t k = 0;
  while (k < Q.size() && Q[k].is_zero())
    ++k;
  std::vector<NewtonEdge> edges;
  if (k > 0)
    edges.push_back({std::nullopt, UniPoly::monomial(1, k), 0, static_cast<int>(k)});
  for (auto& e : finite_edges(SeriesInY(Q.begin() + static_cast<long>(k), Q.end()))) {
    e.left += static_cast<int>(k);
    e.right += static_cast<int>(k);
    edges.push_back(std::move(e));
  }
  return edges;
}

std::vector<Branch> expand_branches(const MultiPoly& q, const Rational& center, const Rational& y0,
                                    const Rational& precision, const ExpansionOptions& options) {
  require_bivariate(q, "expand_branches");
  if (sgn(precision) <= 0)
    throw PreconditionError("precision", "expand_branches: precision must be positive");
  const std::vector<Rational> xi{center, y0};
  if (q.evaluate(xi) != 0)
    throw PreconditionError("zero-of-q", "expand_branches: q does not vanish at (center, y0)");
  bool vanishes_on_line = true;
  const MultiPoly shifted = recentered(q, center, y0);
  for (const auto& [e, c] : shifted.terms())
    if (e[0] == 0) {
      vanishes_on_line = false;
      break;
    }
  if (vanishes_on_line)
    throw PreconditionError("q(center,Y)!=0", "expand_branches: q(center, Y) vanishes identically");
  return Expander(q, center, y0, precision, options).run();
}

namespace {

/// 1/a mod t^n for a(0) != 0.
UniPoly series_inverse(const UniPoly& a, std::size_t n) {
  UniPoly b(1 / a.coefficient(0));
  for (std::size_t prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    // b <- b (2 - a b) doubles the number of correct coefficients.
    const UniPoly ab = mul_truncated(a, b, prec - 1);
    b = mul_truncated(b, UniPoly(2) - ab, prec - 1);
  }
  return b;
}

} // namespace

PuiseuxPoly regular_lift(const MultiPoly& q, const Rational& center, const Rational& y0, unsigned k) {
  require_bivariate(q, "regular_lift");
  const std::vector<Rational> xi{center, y0};
  if (q.evaluate(xi) != 0)
    throw PreconditionError("zero-of-q", "regular_lift: q does not vanish at (center, y0)");
  if (q.partial(1).evaluate(xi) == 0)
    throw PreconditionError("regular-point", "regular_lift: dq/dX2 vanishes at (center, y0)");

  // Coefficients of Y^i as polynomials in t = X1 - center.
  std::vector<UniPoly> Q;
  const MultiPoly shifted = recentered(q, center, 0);
  for (const auto& [e, c] : shifted.terms()) {
    if (Q.size() <= e[1])
      Q.resize(e[1] + 1);
    Q[e[1]] += UniPoly::monomial(c, e[0]);
  }

  // Newton-Hensel iteration, doubling the t-adic precision each step.
  UniPoly y(y0);
  std::size_t prec = 1;
  while (prec < k + 1) {
    prec = std::min<std::size_t>(2 * prec, k + 1);
    UniPoly f, df;
    for (std::size_t i = Q.size(); i-- > 0;) {
      df = mul_truncated(df, y, prec - 1) + f;
      f = mul_truncated(f, y, prec - 1) + Q[i].truncated(prec - 1);
    }
    y = y - mul_truncated(f, series_inverse(df, prec), prec - 1);
  }

  std::vector<PuiseuxTerm> terms;
  for (std::size_t i = 0; i < y.coefficients().size(); ++i)
    terms.push_back({Rational(static_cast<unsigned long>(i)), y.coefficients()[i]});
  return PuiseuxPoly(center, std::move(terms));
}

} // namespace pcert
