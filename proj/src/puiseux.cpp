#include "pcert/puiseux.hpp"
#include "pcert/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pcert {

// Order

const Rational& Order::value() const {
  if (!value_)
    throw std::logic_error("infinite order has no rational value");
  return *value_;
}

bool operator==(const Order& a, const Order& b) { return a.value_ == b.value_; }

bool operator<(const Order& a, const Order& b) {
  if (a.is_infinite())
    return false;
  if (b.is_infinite())
    return true;
  return *a.value_ < *b.value_;
}

Order operator+(const Order& a, const Order& b) {
  if (a.is_infinite() || b.is_infinite())
    return Order::infinity();
  return Order(*a.value_ + *b.value_);
}

std::string Order::to_string() const { return value_ ? pcert::to_string(*value_) : "inf"; }

Order Order::parse(std::string_view text) {
  if (text == "inf")
    return infinity();
  return Order(parse_rational(text));
}

// PuiseuxPoly

PuiseuxPoly::PuiseuxPoly(Rational center) : center_(std::move(center)) {}

PuiseuxPoly::PuiseuxPoly(Rational center, std::vector<PuiseuxTerm> terms) : center_(std::move(center)) {
  std::map<Rational, Rational> merged;
  for (auto& t : terms)
    merged[t.exponent] += t.coefficient;
  for (auto& [e, c] : merged)
    if (c != 0)
      terms_.push_back({e, c});
}

PuiseuxPoly PuiseuxPoly::constant(const Rational& center, const Rational& c) {
  return PuiseuxPoly(center, {{Rational(0), c}});
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& center, const Rational& c, const Rational& exponent) {
  return PuiseuxPoly(center, {{exponent, c}});
}

PuiseuxPoly PuiseuxPoly::identity(const Rational& center) {
  return PuiseuxPoly(center, {{Rational(0), center}, {Rational(1), Rational(1)}});
}

Order PuiseuxPoly::order() const {
  if (terms_.empty())
    return Order::infinity();
  return Order(terms_.front().exponent);
}

Rational PuiseuxPoly::coefficient(const Rational& exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const PuiseuxTerm& t, const Rational& e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coefficient : Rational(0);
}

PuiseuxPoly PuiseuxPoly::truncated(const Rational& bound) const {
  PuiseuxPoly r(center_);
  for (const auto& t : terms_)
    if (t.exponent <= bound)
      r.terms_.push_back(t);
  return r;
}

void PuiseuxPoly::check_center(const PuiseuxPoly& o) const {
  if (o.center_ != center_)
    throw PreconditionError("same-center", "Puiseux series with different centers (" + pcert::to_string(center_) +
                                               " vs " + pcert::to_string(o.center_) + ")");
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  a.check_center(b);
  PuiseuxPoly r(a.center_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->exponent < i->exponent) {
      r.terms_.push_back(*j++);
    } else {
      Rational c = i->coefficient + j->coefficient;
      if (c != 0)
        r.terms_.push_back({i->exponent, c});
      ++i;
      ++j;
    }
  }
  return r;
}

PuiseuxPoly operator-(const PuiseuxPoly& a) {
  PuiseuxPoly r = a;
  for (auto& t : r.terms_)
    t.coefficient = -t.coefficient;
  return r;
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }

PuiseuxPoly operator*(const Rational& c, const PuiseuxPoly& a) {
  PuiseuxPoly r(a.center_);
  if (c == 0)
    return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_)
    t.coefficient *= c;
  return r;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  a.check_center(b);
  std::map<Rational, Rational> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      acc[x.exponent + y.exponent] += x.coefficient * y.coefficient;
  PuiseuxPoly r(a.center_);
  for (auto& [e, c] : acc)
    if (c != 0)
      r.terms_.push_back({e, c});
  return r;
}

std::string PuiseuxPoly::to_string() const {
  if (terms_.empty())
    return "0";
  const std::string base = center_ == 0 ? "t"
                           : sgn(center_) > 0 ? "t - " + pcert::to_string(center_)
                                              : "t + " + pcert::to_string(Rational(-center_));
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Rational mag = abs(t.coefficient);
    if (first)
      os << (sgn(t.coefficient) < 0 ? "-" : "");
    else
      os << (sgn(t.coefficient) < 0 ? " - " : " + ");
    first = false;
    if (t.exponent == 0) {
      os << pcert::to_string(mag);
      continue;
    }
    if (mag != 1)
      os << pcert::to_string(mag) << '*';
    if (center_ == 0)
      os << base;
    else
      os << '(' << base << ')';
    if (t.exponent != 1) {
      if (is_integer(t.exponent) && sgn(t.exponent) > 0)
        os << '^' << pcert::to_string(t.exponent);
      else
        os << "^(" << pcert::to_string(t.exponent) << ')';
    }
  }
  return os.str();
}

PuiseuxPoly pow(const PuiseuxPoly& s, unsigned long e) {
  PuiseuxPoly result = PuiseuxPoly::constant(s.center(), 1);
  PuiseuxPoly base = s;
  while (e > 0) {
    if (e & 1U)
      result *= base;
    e >>= 1U;
    if (e > 0)
      base *= base;
  }
  return result;
}

std::vector<Rational> exponent_ladder(std::span<const PuiseuxPoly> series) {
  std::set<Rational> all{Rational(0)};
  for (const auto& s : series)
    for (const auto& t : s.terms())
      all.insert(t.exponent);
  return {all.begin(), all.end()};
}

// PuiseuxVector

std::optional<std::string> PuiseuxVector::check(std::span<const PuiseuxPoly> components,
                                                std::optional<std::span<const Rational>> point) {
  if (components.empty())
    return "theta: empty vector";
  const Rational& center = components.front().center();
  if (components.front() != PuiseuxPoly::identity(center))
    return "theta[0]: first component must be t";
  for (std::size_t l = 1; l < components.size(); ++l) {
    const auto& s = components[l];
    if (s.center() != center)
      return "theta[" + std::to_string(l) + "]: center differs from theta[0]";
    for (const auto& t : s.terms())
      if (sgn(t.exponent) < 0)
        return "theta[" + std::to_string(l) + "]: negative exponent " + pcert::to_string(t.exponent);
  }
  if (point) {
    if (point->size() != components.size())
      return "theta: length differs from the point";
    if ((*point)[0] != center)
      return "theta: center differs from xi_1";
    for (std::size_t l = 1; l < components.size(); ++l)
      if (components[l].constant_term() != (*point)[l])
        return "theta[" + std::to_string(l) + "]: constant term differs from xi_" + std::to_string(l + 1);
  }
  return std::nullopt;
}

PuiseuxVector PuiseuxVector::make(std::vector<PuiseuxPoly> components,
                                  std::optional<std::span<const Rational>> point) {
  if (auto problem = check(components, point))
    throw PreconditionError("theta", *problem);
  return PuiseuxVector(std::move(components));
}

PuiseuxVector PuiseuxVector::constant_tail(std::span<const Rational> point) {
  if (point.empty())
    throw PreconditionError("theta", "theta: empty point");
  std::vector<PuiseuxPoly> comps{PuiseuxPoly::identity(point[0])};
  for (std::size_t l = 1; l < point.size(); ++l)
    comps.push_back(PuiseuxPoly::constant(point[0], point[l]));
  return PuiseuxVector(std::move(comps));
}

std::vector<Rational> PuiseuxVector::point() const {
  std::vector<Rational> p{center()};
  for (std::size_t l = 1; l < components_.size(); ++l)
    p.push_back(components_[l].constant_term());
  return p;
}

std::vector<Rational> PuiseuxVector::ladder() const {
  return exponent_ladder(std::span(components_).subspan(1));
}

PuiseuxVector PuiseuxVector::truncated(const Rational& bound) const {
  std::vector<PuiseuxPoly> comps{components_.front()};
  for (std::size_t l = 1; l < components_.size(); ++l)
    comps.push_back(components_[l].truncated(bound));
  return PuiseuxVector(std::move(comps));
}

// Substitution

namespace {

void check_substitution(const MultiPoly& f, std::span<const PuiseuxPoly> components) {
  if (components.size() != f.nvars())
    throw PreconditionError("arity", "substitute: " + std::to_string(components.size()) + " series for " +
                                         std::to_string(f.nvars()) + " variables");
  const Rational& center = components.front().center();
  for (const auto& s : components)
    if (s.center() != center)
      throw PreconditionError("same-center", "substitute: series with different centers");
}

// Series with exponents k/E, k >= 0, stored as integer numerators over one
// denominator. Products then need no gcd per coefficient.
struct DenseSeries {
  std::vector<Integer> num;
  Integer den = 1;
};

DenseSeries to_dense(const PuiseuxPoly& s, const Integer& E) {
  DenseSeries d;
  for (const auto& t : s.terms())
    mpz_lcm(d.den.get_mpz_t(), d.den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  for (const auto& t : s.terms()) {
    const Rational k = t.exponent * E;
    const auto idx = static_cast<std::size_t>(k.get_num().get_ui());
    if (d.num.size() <= idx)
      d.num.resize(idx + 1);
    d.num[idx] = t.coefficient.get_num() * (d.den / t.coefficient.get_den());
  }
  return d;
}

DenseSeries multiply(const DenseSeries& a, const DenseSeries& b) {
  DenseSeries r;
  r.den = a.den * b.den;
  if (a.num.empty() || b.num.empty())
    return r;
  r.num.resize(a.num.size() + b.num.size() - 1);
  for (std::size_t i = 0; i < a.num.size(); ++i) {
    if (sgn(a.num[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.num.size(); ++j)
      if (sgn(b.num[j]) != 0)
        mpz_addmul(r.num[i + j].get_mpz_t(), a.num[i].get_mpz_t(), b.num[j].get_mpz_t());
  }
  return r;
}

// acc += c * x
void add_scaled(DenseSeries& acc, const Rational& c, const DenseSeries& x) {
  Integer den = x.den * c.get_den();
  Integer l;
  mpz_lcm(l.get_mpz_t(), acc.den.get_mpz_t(), den.get_mpz_t());
  if (l != acc.den) {
    const Integer up = l / acc.den;
    for (auto& v : acc.num)
      v *= up;
    acc.den = l;
  }
  const Integer scale = c.get_num() * (l / den);
  if (acc.num.size() < x.num.size())
    acc.num.resize(x.num.size());
  for (std::size_t k = 0; k < x.num.size(); ++k)
    if (sgn(x.num[k]) != 0)
      mpz_addmul(acc.num[k].get_mpz_t(), x.num[k].get_mpz_t(), scale.get_mpz_t());
}

// Powers of the components in dense integer form, built once and shared by
// every polynomial evaluated at the same point.
class Substituter {
public:
  explicit Substituter(std::span<const PuiseuxPoly> components) : center_(components.front().center()) {
    for (const auto& s : components)
      for (const auto& t : s.terms())
        mpz_lcm(E_.get_mpz_t(), E_.get_mpz_t(), t.exponent.get_den_mpz_t());
    for (const auto& s : components) {
      base_.push_back(to_dense(s, E_));
      powers_.push_back({one_});
    }
  }

  static bool applicable(std::span<const PuiseuxPoly> components) {
    for (const auto& s : components)
      for (const auto& t : s.terms())
        if (sgn(t.exponent) < 0)
          return false;
    return true;
  }

  void prepare(const MultiPoly& f) {
    for (const auto& [e, c] : f.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        while (powers_[i].size() <= e[i])
          powers_[i].push_back(multiply(powers_[i].back(), base_[i]));
  }

  /// Requires prepare(f) first; safe to call concurrently afterwards.
  PuiseuxPoly evaluate(const MultiPoly& f) const {
    DenseSeries acc;
    for (const auto& [e, c] : f.terms()) {
      DenseSeries product;
      const DenseSeries* term = &one_;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
          continue;
        const DenseSeries& p = powers_[i][e[i]];
        if (term == &one_) {
          term = &p;
        } else {
          product = multiply(*term, p);
          term = &product;
        }
      }
      add_scaled(acc, c, *term);
    }
    std::vector<PuiseuxTerm> terms;
    const long e_long = to_long(E_);
    for (std::size_t k = 0; k < acc.num.size(); ++k) {
      if (sgn(acc.num[k]) == 0)
        continue;
      Rational c(acc.num[k], acc.den);
      c.canonicalize();
      terms.push_back({ratio(static_cast<long>(k), e_long), std::move(c)});
    }
    return PuiseuxPoly(center_, std::move(terms));
  }

private:
  Rational center_;
  Integer E_ = 1;
  DenseSeries one_{{Integer(1)}, Integer(1)};
  std::vector<DenseSeries> base_;
  std::vector<std::vector<DenseSeries>> powers_;
};

} // namespace

PuiseuxPoly substitute(const MultiPoly& f, std::span<const PuiseuxPoly> components) {
  check_substitution(f, components);
  if (!Substituter::applicable(components))
    return reference::substitute(f, components);
  Substituter sub(components);
  sub.prepare(f);
  return sub.evaluate(f);
}

namespace reference {

PuiseuxPoly substitute(const MultiPoly& f, std::span<const PuiseuxPoly> components) {
  check_substitution(f, components);
  const Rational& center = components.front().center();
  std::vector<std::vector<PuiseuxPoly>> powers(components.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const PuiseuxPoly& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.push_back(PuiseuxPoly::constant(center, 1));
    while (cache.size() <= k)
      cache.push_back(cache.back() * components[i]);
    return cache[k];
  };
  PuiseuxPoly out(center);
  for (const auto& [e, c] : f.terms()) {
    PuiseuxPoly term = PuiseuxPoly::constant(center, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        term *= power(i, e[i]);
    out += term;
  }
  return out;
}

} // namespace reference

PuiseuxPoly substitute(const MultiPoly& f, const PuiseuxVector& theta) {
  return substitute(f, std::span<const PuiseuxPoly>(theta.components()));
}

namespace {

void check_profile_arity(std::span<const MultiPoly> system, const PuiseuxVector& theta) {
  for (std::size_t j = 0; j < system.size(); ++j)
    if (system[j].nvars() != theta.size())
      throw PreconditionError("arity", "f" + std::to_string(j + 1) + " has " + std::to_string(system[j].nvars()) +
                                           " variables but theta has " + std::to_string(theta.size()) +
                                           " components");
}

} // namespace

std::vector<Order> vanishing_order_profile(std::span<const MultiPoly> system, const PuiseuxVector& theta) {
  check_profile_arity(system, theta);
  std::vector<Order> orders(system.size());
  const auto& comps = theta.components();
  if (!Substituter::applicable(comps)) {
    for (std::size_t j = 0; j < system.size(); ++j)
      orders[j] = reference::substitute(system[j], comps).order();
    return orders;
  }
  Substituter sub(comps);
  for (const auto& f : system)
    sub.prepare(f);
  const auto count = static_cast<long>(system.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < count; ++j)
    orders[static_cast<std::size_t>(j)] = sub.evaluate(system[static_cast<std::size_t>(j)]).order();
  return orders;
}

namespace serial {

std::vector<Order> vanishing_order_profile(std::span<const MultiPoly> system, const PuiseuxVector& theta) {
  check_profile_arity(system, theta);
  std::vector<Order> orders;
  orders.reserve(system.size());
  for (const auto& f : system)
    orders.push_back(substitute(f, theta).order());
  return orders;
}

} // namespace serial

} // namespace pcert
