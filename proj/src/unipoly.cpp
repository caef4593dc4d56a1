#include "pcert/unipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pcert {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(const Rational& constant) {
  if (constant != 0)
    coeffs_.push_back(constant);
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_factor(const Rational& root) { return UniPoly({Rational(-root), Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::leading() const {
  if (coeffs_.empty())
    throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1)
    return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::taylor_shift(const Rational& shift) const {
  // Horner with (x + shift) in place of x.
  std::vector<Rational> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j)
      c[j - 1] += shift * c[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1)
    return *this;
  return UniPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(max_degree) + 1));
}

UniPoly UniPoly::monic() const {
  if (is_zero())
    return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lc = c.back();
  for (auto& x : c)
    x /= lc;
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    c[i] += b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c)
    x = -x;
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

namespace {

// Integer numerators over the lcm of the denominators.
Integer common_denominator(const std::vector<Rational>& v, std::vector<Integer>& num) {
  Integer den = 1;
  for (const auto& c : v)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  num.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    num[i] = v[i].get_num() * (den / v[i].get_den());
  return den;
}

} // namespace

UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, std::size_t max_degree) {
  if (a.is_zero() || b.is_zero())
    return {};
  const std::size_t size = std::min(a.coeffs_.size() + b.coeffs_.size() - 1, max_degree + 1);
  std::vector<Integer> an, bn;
  const Integer den = common_denominator(a.coeffs_, an) * common_denominator(b.coeffs_, bn);
  std::vector<Integer> acc(size);
  for (std::size_t i = 0; i < std::min(an.size(), size); ++i) {
    if (sgn(an[i]) == 0)
      continue;
    for (std::size_t j = 0; j < bn.size() && i + j < size; ++j)
      if (sgn(bn[j]) != 0)
        mpz_addmul(acc[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
  }
  std::vector<Rational> c(size);
  for (std::size_t k = 0; k < size; ++k) {
    c[k] = Rational(acc[k], den);
    c[k].canonicalize();
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  return mul_truncated(a, b, a.coeffs_.size() + b.coeffs_.size());
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0)
      continue;
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << pcert::to_string(mag);
      continue;
    }
    if (mag != 1)
      os << pcert::to_string(mag) << '*';
    os << var;
    if (i > 1)
      os << '^' << i;
  }
  return os.str();
}

UniPoly pow(const UniPoly& p, unsigned long e) {
  UniPoly result(Rational(1));
  UniPoly base = p;
  while (e > 0) {
    if (e & 1U)
      result *= base;
    e >>= 1U;
    if (e > 0)
      base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree())
    return {UniPoly{}, a};
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational factor = r[k + db] / bc[db];
    q[k] = factor;
    if (factor == 0)
      continue;
    for (std::size_t j = 0; j <= db; ++j)
      r[k + j] -= factor * bc[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

int root_multiplicity(const UniPoly& p, const Rational& x0) {
  if (p.is_zero())
    throw std::domain_error("root multiplicity of the zero polynomial");
  // Repeated synthetic division by (x - x0).
  std::vector<Rational> c = p.coefficients();
  int k = 0;
  while (c.size() > 1) {
    std::vector<Rational> q(c.size() - 1);
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      acc = acc * x0 + c[i];
      q[i - 1] = acc;
    }
    Rational remainder = acc * x0 + c[0];
    if (remainder != 0)
      break;
    c = std::move(q);
    ++k;
  }
  return k;
}

std::vector<Integer> integer_primitive(const UniPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero())
    return out;
  Integer l = 1;
  for (const auto& c : p.coefficients())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (sgn(out.back()) < 0)
    g = -g;
  for (auto& v : out)
    v /= g;
  return out;
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t()))
    return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i)
        y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = abs(Integer(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
  if (n == 1)
    return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = ds.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

} // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0)
    throw std::domain_error("factor_integer(0)");
  Integer m = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 1000 && m != 1; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p) {
  if (p.is_zero())
    throw std::domain_error("rational roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  const auto& c = p.coefficients();
  std::size_t low = 0;
  while (c[low] == 0)
    ++low;
  if (low > 0)
    roots.emplace_back(Rational(0), static_cast<int>(low));
  UniPoly rest(std::vector<Rational>(c.begin() + static_cast<long>(low), c.end()));
  if (rest.degree() < 1)
    return roots;

  // Candidates come from the squarefree part, which has the same roots.
  UniPoly sqf = divide_exact(rest, gcd(rest, rest.derivative()));
  if (sqf.degree() == 1) {
    Rational r = -sqf.coefficient(0) / sqf.coefficient(1);
    roots.emplace_back(r, root_multiplicity(rest, r));
  } else {
    const auto ints = integer_primitive(sqf);
    std::set<Rational> found;
    for (const auto& num : divisors(ints.front()))
      for (const auto& den : divisors(ints.back()))
        for (int sign : {1, -1}) {
          Rational cand(Integer(sign * num), den);
          cand.canonicalize();
          if (found.count(cand) != 0)
            continue;
          if (sqf(cand) == 0)
            found.insert(cand);
        }
    for (const auto& r : found)
      roots.emplace_back(r, root_multiplicity(rest, r));
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

} // namespace pcert
