#pragma once

#include "pcert/multipoly.hpp"
#include "pcert/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcert {

/// A rational order or +infinity (the order of the zero series).
/// Infinity compares greater than every rational.
class Order {
public:
  Order() = default; // infinity
  Order(Rational value) : value_(std::move(value)) {} // NOLINT(google-explicit-constructor)

  static Order infinity() { return Order{}; }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  friend bool operator==(const Order& a, const Order& b);
  friend bool operator<(const Order& a, const Order& b);
  friend bool operator>(const Order& a, const Order& b) { return b < a; }
  friend bool operator<=(const Order& a, const Order& b) { return !(b < a); }
  friend bool operator>=(const Order& a, const Order& b) { return !(a < b); }
  friend Order operator+(const Order& a, const Order& b);

  /// "inf" or the canonical rational.
  std::string to_string() const;
  static Order parse(std::string_view text);

private:
  std::optional<Rational> value_;
};

struct PuiseuxTerm {
  Rational exponent;
  Rational coefficient;
  friend bool operator==(const PuiseuxTerm&, const PuiseuxTerm&) = default;
};

/// Finite sum  sum_i c_i (t - center)^{g_i}  with rational exponents.
///
/// Terms are kept sorted by strictly increasing exponent with nonzero
/// coefficients; the constructor sorts, merges and drops zeros.
class PuiseuxPoly {
public:
  explicit PuiseuxPoly(Rational center = 0);
  PuiseuxPoly(Rational center, std::vector<PuiseuxTerm> terms);

  static PuiseuxPoly constant(const Rational& center, const Rational& c);
  static PuiseuxPoly monomial(const Rational& center, const Rational& c, const Rational& exponent);
  /// The series of t itself: center + 1*(t - center)^1.
  static PuiseuxPoly identity(const Rational& center);

  const Rational& center() const { return center_; }
  const std::vector<PuiseuxTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Order order() const;
  Rational coefficient(const Rational& exponent) const;
  Rational constant_term() const { return coefficient(0); }

  /// Keeps the terms with exponent <= bound.
  PuiseuxPoly truncated(const Rational& bound) const;

  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const Rational& c, const PuiseuxPoly& a);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a);
  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) = default;

  PuiseuxPoly& operator+=(const PuiseuxPoly& o) { return *this = *this + o; }
  PuiseuxPoly& operator*=(const PuiseuxPoly& o) { return *this = *this * o; }

  /// e.g. "1 + t^(3/2)" or "2 - 1/2*(t - 1)^2"; the zero series prints "0".
  std::string to_string() const;

private:
  void check_center(const PuiseuxPoly& o) const;

  Rational center_;
  std::vector<PuiseuxTerm> terms_;
};

PuiseuxPoly pow(const PuiseuxPoly& s, unsigned long e);

/// Sorted union of {0} and every exponent appearing in `series`.
std::vector<Rational> exponent_ladder(std::span<const PuiseuxPoly> series);

/// Vector (t, theta_2, ..., theta_n) of truncated series sharing a center.
class PuiseuxVector {
public:
  /// Returns a description of the first violated invariant, if any. When
  /// `point` is given its coordinates must match the constant terms.
  static std::optional<std::string> check(std::span<const PuiseuxPoly> components,
                                          std::optional<std::span<const Rational>> point = std::nullopt);

  /// Throws PreconditionError when check() fails.
  static PuiseuxVector make(std::vector<PuiseuxPoly> components,
                            std::optional<std::span<const Rational>> point = std::nullopt);

  /// (t, point[1] + ..., ) with constant tails; convenient for exact lines.
  static PuiseuxVector constant_tail(std::span<const Rational> point);

  std::size_t size() const { return components_.size(); }
  const std::vector<PuiseuxPoly>& components() const { return components_; }
  const PuiseuxPoly& operator[](std::size_t i) const { return components_[i]; }
  const Rational& center() const { return components_.front().center(); }
  /// The point (center, constant terms of components 2..n).
  std::vector<Rational> point() const;
  /// exponent_ladder of components 2..n.
  std::vector<Rational> ladder() const;
  /// Components 2..n truncated at `bound`; component 1 stays t.
  PuiseuxVector truncated(const Rational& bound) const;

private:
  explicit PuiseuxVector(std::vector<PuiseuxPoly> components) : components_(std::move(components)) {}
  std::vector<PuiseuxPoly> components_;
};

/// f evaluated at the given series. Exact: the result is a finite series.
/// Throws PreconditionError on arity or center mismatch.
PuiseuxPoly substitute(const MultiPoly& f, std::span<const PuiseuxPoly> components);
PuiseuxPoly substitute(const MultiPoly& f, const PuiseuxVector& theta);

namespace reference {
/// Term-by-term substitution with sparse rational arithmetic. Slow; kept as
/// the oracle for the dense integer path of substitute().
PuiseuxPoly substitute(const MultiPoly& f, std::span<const PuiseuxPoly> components);
} // namespace reference

/// Orders of f_j(theta), one OpenMP task per polynomial.
std::vector<Order> vanishing_order_profile(std::span<const MultiPoly> system, const PuiseuxVector& theta);

namespace serial {
/// Reference loop for vanishing_order_profile.
std::vector<Order> vanishing_order_profile(std::span<const MultiPoly> system, const PuiseuxVector& theta);
} // namespace serial

} // namespace pcert
