#pragma once

#include "pcert/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pcert {

using Exponents = std::vector<std::uint32_t>;

/// Graded-lex descending: higher total degree first, ties broken by
/// lexicographic order with X1 most significant.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are keyed by exponent vector and never hold a zero coefficient, so
/// the zero polynomial is the empty map and equality is structural.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit MultiPoly(std::size_t nvars = 1);

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  /// The variable X_{index+1} (index is zero based).
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Rational& c, Exponents exps);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Exponents& exps) const;

  /// Adds c * x^exps in place.
  void add_term(const Exponents& exps, const Rational& c);

  /// Maximum exponent of variable `index`. Throws std::domain_error on zero.
  std::uint32_t degree_in(std::size_t index) const;
  /// Throws std::domain_error on zero.
  std::uint32_t total_degree() const;

  Rational evaluate(std::span<const Rational> point) const;
  MultiPoly partial(std::size_t index) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  /// Canonical text in graded-lex order using the given variable names.
  std::string to_string(std::span<const std::string> names) const;

private:
  void check_arity(const MultiPoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& f, unsigned long e);

/// f(images[0], ..., images[n-1]); every image must share one arity.
MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> images);

/// Exponent vectors of the terms of f.
std::vector<Exponents> support(const MultiPoly& f);

/// Default names x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

} // namespace pcert
