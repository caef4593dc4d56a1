#include "pcert/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcert {

namespace {

std::uint64_t total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

} // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto ta = total(a), tb = total(b);
  if (ta != tb)
    return ta > tb;
  return b < a;
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0)
    throw std::invalid_argument("MultiPoly needs at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars)
    throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents exps) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_)
    throw std::invalid_argument("exponent vector length does not match the number of variables");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

std::uint32_t MultiPoly::degree_in(std::size_t index) const {
  if (index >= nvars_)
    throw std::out_of_range("variable index out of range");
  if (is_zero())
    throw std::domain_error("degree of the zero polynomial is undefined");
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, e[index]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  if (is_zero())
    throw std::domain_error("degree of the zero polynomial is undefined");
  // The map is graded, so the first key has the largest total degree.
  return static_cast<std::uint32_t>(total(terms_.begin()->first));
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_)
    throw std::invalid_argument("point dimension does not match the number of variables");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0)
        m *= pow(point[i], e[i]);
    acc += m;
  }
  return acc;
}

MultiPoly MultiPoly::partial(std::size_t index) const {
  MultiPoly d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0)
      continue;
    Exponents f = e;
    --f[index];
    d.add_term(f, c * static_cast<unsigned long>(e[index]));
  }
  return d;
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (o.nvars_ != nvars_)
    throw std::invalid_argument("polynomials over different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_)
    c = -c;
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  MultiPoly r(a.nvars_);
  if (s == 0)
    return r;
  r.terms_ = a.terms_;
  for (auto& [e, c] : r.terms_)
    c *= s;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_)
    throw std::invalid_argument("wrong number of variable names");
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    const Rational mag = abs(c);
    const bool is_const = total(e) == 0;
    if (is_const) {
      os << pcert::to_string(mag);
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << pcert::to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0)
        continue;
      if (need_star)
        os << '*';
      os << names[i];
      if (e[i] > 1)
        os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& f, unsigned long e) {
  MultiPoly result = MultiPoly::constant(f.nvars(), 1);
  MultiPoly base = f;
  while (e > 0) {
    if (e & 1U)
      result *= base;
    e >>= 1U;
    if (e > 0)
      base *= base;
  }
  return result;
}

MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> images) {
  if (images.size() != f.nvars())
    throw std::invalid_argument("compose: need one image per variable");
  if (images.empty())
    throw std::invalid_argument("compose: no images");
  const std::size_t target = images.front().nvars();
  for (const auto& g : images)
    if (g.nvars() != target)
      throw std::invalid_argument("compose: images over different numbers of variables");
  // powers[i][k] = images[i]^k, built on demand.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty())
      cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= k)
      cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MultiPoly out(target);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0)
        term *= power(i, e[i]);
    out += term;
  }
  return out;
}

std::vector<Exponents> support(const MultiPoly& f) {
  std::vector<Exponents> s;
  s.reserve(f.term_count());
  for (const auto& [e, c] : f.terms())
    s.push_back(e);
  return s;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back("x" + std::to_string(i));
  return names;
}

} // namespace pcert
