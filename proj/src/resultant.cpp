#include "pcert/resultant.hpp"
#include "pcert/errors.hpp"

#include <algorithm>
#include <tuple>

namespace pcert {

namespace {

void require_bivariate(const MultiPoly& f, const char* who) {
  if (f.nvars() != 2)
    throw PreconditionError("bivariate", std::string(who) + ": polynomial is not bivariate");
  if (f.is_zero())
    throw PreconditionError("nonzero", std::string(who) + ": zero polynomial");
}

long deg(const PolyInY& p) { return static_cast<long>(p.size()) - 1; }

void trim(PolyInY& p) {
  while (!p.empty() && p.back().is_zero())
    p.pop_back();
}

UniPoly content(const PolyInY& p) {
  UniPoly c;
  for (const auto& coeff : p) {
    c = gcd(c, coeff);
    if (c.degree() == 0)
      break;
  }
  return c;
}

PolyInY scale(const PolyInY& p, const UniPoly& s) {
  PolyInY r;
  r.reserve(p.size());
  for (const auto& c : p)
    r.push_back(c * s);
  trim(r);
  return r;
}

PolyInY divide(const PolyInY& p, const UniPoly& s) {
  PolyInY r;
  r.reserve(p.size());
  for (const auto& c : p)
    r.push_back(divide_exact(c, s));
  trim(r);
  return r;
}

PolyInY primitive_part(const PolyInY& p) { return p.empty() ? p : divide(p, content(p)); }

/// lc(b)^(deg a - deg b + 1) * a  mod b, in Q[x][y].
PolyInY pseudo_remainder(const PolyInY& a, const PolyInY& b) {
  PolyInY r = a;
  const long db = deg(b);
  long e = deg(a) - db + 1;
  const UniPoly& lb = b.back();
  while (!r.empty() && deg(r) >= db) {
    const UniPoly lr = r.back();
    const auto shift = static_cast<std::size_t>(deg(r) - db);
    for (auto& c : r)
      c *= lb;
    for (std::size_t k = 0; k < b.size(); ++k)
      r[shift + k] -= lr * b[k];
    trim(r);
    --e;
  }
  if (e > 0)
    r = scale(r, pow(lb, static_cast<unsigned long>(e)));
  return r;
}

} // namespace

PolyInY to_poly_in_y(const MultiPoly& f) {
  if (f.nvars() != 2)
    throw PreconditionError("bivariate", "polynomial is not bivariate");
  PolyInY p;
  for (const auto& [e, c] : f.terms()) {
    if (p.size() <= e[1])
      p.resize(e[1] + 1);
    p[e[1]] += UniPoly::monomial(c, e[0]);
  }
  trim(p);
  return p;
}

MultiPoly from_poly_in_y(const PolyInY& p) {
  MultiPoly f(2);
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& coeffs = p[k].coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)}, coeffs[i]);
  }
  return f;
}

UniPoly leading_y_coefficient(const MultiPoly& f) {
  require_bivariate(f, "leading_y_coefficient");
  return to_poly_in_y(f).back();
}

UniPoly resultant_y(const MultiPoly& f, const MultiPoly& g) {
  require_bivariate(f, "resultant_y");
  require_bivariate(g, "resultant_y");
  PolyInY a = to_poly_in_y(f), b = to_poly_in_y(g);
  if (deg(a) < 1 || deg(b) < 1)
    throw PreconditionError("positive-y-degree", "resultant_y: both inputs need positive X2-degree");

  // Subresultant PRS with content removal (Cohen, GTM 138, Alg. 3.3.7).
  Rational sign = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1)
      sign = -sign;
  }
  const UniPoly ca = content(a), cb = content(b);
  a = divide(a, ca);
  b = divide(b, cb);
  const UniPoly t = pow(ca, static_cast<unsigned long>(deg(b))) * pow(cb, static_cast<unsigned long>(deg(a)));

  UniPoly gg(Rational(1)), h(Rational(1));
  for (;;) {
    const long delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1)
      sign = -sign;
    PolyInY r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty())
      return {};
    b = divide(r, gg * pow(h, static_cast<unsigned long>(delta)));
    gg = a.back();
    if (delta == 1)
      h = gg;
    else if (delta > 1)
      h = divide_exact(pow(gg, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
    if (deg(b) == 0)
      break;
  }
  const auto da = static_cast<unsigned long>(deg(a));
  h = divide_exact(pow(b.back(), da), pow(h, da - 1));
  return UniPoly(sign) * t * h;
}

UniPoly resultant_y_sylvester(const MultiPoly& f, const MultiPoly& g) {
  require_bivariate(f, "resultant_y_sylvester");
  require_bivariate(g, "resultant_y_sylvester");
  const PolyInY a = to_poly_in_y(f), b = to_poly_in_y(g);
  const long m = deg(a), n = deg(b);
  if (m < 1 || n < 1)
    throw PreconditionError("positive-y-degree", "resultant_y_sylvester: both inputs need positive X2-degree");
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<UniPoly>> M(size, std::vector<UniPoly>(size));
  for (long i = 0; i < n; ++i)
    for (long k = 0; k <= m; ++k)
      M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = a[static_cast<std::size_t>(m - k)];
  for (long j = 0; j < m; ++j)
    for (long k = 0; k <= n; ++k)
      M[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(j + k)] = b[static_cast<std::size_t>(n - k)];

  // Bareiss fraction-free elimination.
  Rational sign = 1;
  UniPoly prev(Rational(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < size && M[r][k].is_zero())
        ++r;
      if (r == size)
        return {};
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        M[i][j] = divide_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = UniPoly{};
    }
    prev = M[k][k];
  }
  return UniPoly(sign) * M[size - 1][size - 1];
}

MultiPoly normalize_bivariate(const MultiPoly& f) {
  if (f.is_zero())
    throw PreconditionError("nonzero", "normalize_bivariate: zero polynomial");
  Integer l = 1, g = 0;
  for (const auto& [e, c] : f.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : f.terms()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  // Leading term under lex with X2 > X1.
  auto lead = std::max_element(f.terms().begin(), f.terms().end(), [](const auto& x, const auto& y) {
    return std::tie(x.first[1], x.first[0]) < std::tie(y.first[1], y.first[0]);
  });
  Rational s(l, g);
  s.canonicalize();
  if (sgn(lead->second) < 0)
    s = -s;
  return s * f;
}

MultiPoly gcd_bivariate(const MultiPoly& f, const MultiPoly& g) {
  require_bivariate(f, "gcd_bivariate");
  require_bivariate(g, "gcd_bivariate");
  PolyInY a = to_poly_in_y(f), b = to_poly_in_y(g);
  const UniPoly ca = content(a), cb = content(b);
  const UniPoly c = gcd(ca, cb);
  PolyInY result{c};
  if (deg(a) > 0 && deg(b) > 0) {
    a = divide(a, ca);
    b = divide(b, cb);
    if (deg(a) < deg(b))
      std::swap(a, b);
    // Primitive remainder sequence.
    while (!b.empty()) {
      PolyInY r = pseudo_remainder(a, b);
      a = std::move(b);
      b = primitive_part(r);
    }
    a = primitive_part(a);
    if (deg(a) > 0)
      result = scale(a, c);
  }
  return normalize_bivariate(from_poly_in_y(result));
}

std::optional<MultiPoly> divide_bivariate(const MultiPoly& f, const MultiPoly& g) {
  require_bivariate(g, "divide_bivariate");
  if (f.nvars() != 2)
    throw PreconditionError("bivariate", "divide_bivariate: polynomial is not bivariate");
  PolyInY r = to_poly_in_y(f);
  const PolyInY d = to_poly_in_y(g);
  PolyInY q;
  while (!r.empty() && deg(r) >= deg(d)) {
    auto [coeff, rem] = divmod(r.back(), d.back());
    if (!rem.is_zero())
      return std::nullopt;
    const auto shift = static_cast<std::size_t>(deg(r) - deg(d));
    if (q.size() <= shift)
      q.resize(shift + 1);
    q[shift] = coeff;
    for (std::size_t k = 0; k < d.size(); ++k)
      r[shift + k] -= coeff * d[k];
    trim(r);
  }
  if (!r.empty())
    return std::nullopt;
  trim(q);
  return from_poly_in_y(q);
}

} // namespace pcert
