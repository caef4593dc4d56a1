#pragma once

#include "pcert/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pcert {

/// Dense univariate polynomial over Q, lowest degree first. The coefficient
/// vector never ends in a zero; the zero polynomial has no coefficients.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(const Rational& constant); // NOLINT(google-explicit-constructor)

  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// x - root
  static UniPoly linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly derivative() const;
  /// p(x + shift)
  UniPoly taylor_shift(const Rational& shift) const;
  /// Drops every term of degree > max_degree.
  UniPoly truncated(std::size_t max_degree) const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  /// a * b with every term of degree > max_degree dropped.
  friend UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, std::size_t max_degree);
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned long e);
UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, std::size_t max_degree);

/// Quotient and remainder over Q. Throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Exact quotient; throws std::domain_error if b does not divide a.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Largest k with (x - x0)^k dividing p. Throws std::domain_error for p = 0.
int root_multiplicity(const UniPoly& p, const Rational& x0);

/// All rational roots of a nonzero p with their multiplicities, ascending.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p);

/// Scales p by a positive rational so the coefficients are coprime integers.
/// Returns the scaled coefficients (lowest degree first).
std::vector<Integer> integer_primitive(const UniPoly& p);

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

} // namespace pcert
