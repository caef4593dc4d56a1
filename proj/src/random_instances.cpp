#include "pcert/random_instances.hpp"

namespace pcert {

MultiPoly random_bivariate(std::mt19937_64& rng, int max_degree, int coeff_bound) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::bernoulli_distribution keep(0.5);
  MultiPoly f(2);
  for (int total = 0; total <= max_degree; ++total)
    for (int i = 0; i <= total; ++i) {
      if (!keep(rng))
        continue;
      const int c = coeff(rng);
      if (c != 0)
        f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(total - i)}, Rational(c));
    }
  return f;
}

namespace {

// Shift f by a constant so that it vanishes at xi.
MultiPoly vanish_at(MultiPoly f, const std::vector<Rational>& xi) {
  const Rational value = f.evaluate(xi);
  f -= MultiPoly::constant(2, value);
  return f;
}

bool usable_in_y(const MultiPoly& f, const Rational& xi1) {
  if (f.is_zero() || f.degree_in(1) == 0)
    return false;
  const std::vector<MultiPoly> images{MultiPoly::constant(2, xi1), MultiPoly::variable(2, 1)};
  return !compose(f, images).is_zero();
}

} // namespace

CommonFactorPair random_common_factor_pair(std::mt19937_64& rng, int max_degree, int coeff_bound) {
  std::uniform_int_distribution<int> coordinate(-2, 2);
  for (;;) {
    CommonFactorPair p;
    p.xi1 = coordinate(rng);
    p.xi2 = coordinate(rng);
    const std::vector<Rational> xi{p.xi1, p.xi2};
    p.g = vanish_at(random_bivariate(rng, max_degree, coeff_bound), xi);
    if (!usable_in_y(p.g, p.xi1))
      continue;
    p.h1 = random_bivariate(rng, max_degree, coeff_bound);
    p.h2 = random_bivariate(rng, max_degree, coeff_bound);
    if (p.h1.is_zero() || p.h2.is_zero())
      continue;
    p.f1 = p.g * p.h1;
    p.f2 = p.g * p.h2;
    return p;
  }
}

RootedPolynomial random_rooted_polynomial(std::mt19937_64& rng, int max_degree, int coeff_bound) {
  std::uniform_int_distribution<int> coordinate(-2, 2);
  for (;;) {
    RootedPolynomial r;
    r.y0 = coordinate(rng);
    r.q = vanish_at(random_bivariate(rng, max_degree, coeff_bound), {Rational(0), r.y0});
    if (usable_in_y(r.q, Rational(0)))
      return r;
  }
}

std::vector<PuiseuxPoly> rational_branches(const MultiPoly& g, const Rational& xi1, const Rational& xi2,
                                           const Rational& precision) {
  const std::vector<Rational> xi{xi1, xi2};
  if (g.partial(1).evaluate(xi) != 0)
    return {regular_lift(g, xi1, xi2, static_cast<unsigned>(to_long(ceil(precision))))};
  std::vector<PuiseuxPoly> out;
  for (const auto& b : expand_branches(g, xi1, xi2, std::max(precision, Rational(1))))
    if (b.status != BranchStatus::irrational_obstruction)
      out.push_back(b.expansion);
  return out;
}

bool agree_up_to_conjugation(const PuiseuxPoly& a, const PuiseuxPoly& b, const Rational& bound, const Integer& e) {
  if (a.center() != b.center())
    return false;
  const PuiseuxPoly ta = a.truncated(bound);
  const PuiseuxPoly tb = b.truncated(bound);
  if (ta == tb)
    return true;
  if (e % 2 != 0)
    return false;
  // Flip the sign of terms whose exponent has odd numerator over e.
  std::vector<PuiseuxTerm> flipped;
  for (const auto& t : tb.terms()) {
    const Rational scaled = t.exponent * Rational(e);
    const bool odd = is_integer(scaled) && scaled.get_num() % 2 != 0;
    flipped.push_back({t.exponent, odd ? Rational(-t.coefficient) : t.coefficient});
  }
  return ta == PuiseuxPoly(b.center(), std::move(flipped));
}

} // namespace pcert
