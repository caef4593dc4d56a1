#pragma once

#include "pcert/multipoly.hpp"
#include "pcert/polytope.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcert {

enum class BoundKind { bezout_noether, sparse_noether, bezout_degree, sparse_degree, mixedvol_degree };

std::string to_string(BoundKind k);
BoundKind parse_bound_kind(const std::string& text);

/// An upper bound for the Noether exponent e(f) or for deg V(f), with the
/// formula and inputs that produced it.
struct BoundReport {
  BoundKind kind = BoundKind::bezout_noether;
  Integer value = 1;
  std::string formula;
  std::map<std::string, std::string> inputs;
};

/// e(f) <= d^min(n, m) for polynomials of degree <= d.
BoundReport bezout_noether_bound(long d, long n, long m);
/// e(f) <= n^(n+2) n! vol(A u simplex), A the union of the supports.
BoundReport sparse_noether_bound(std::span<const Support> supports, std::size_t n);
/// deg V(f) <= d^min(n, m).
BoundReport bezout_degree_bound(long d, long n, long m);
/// deg V(f) <= n! vol(A u simplex).
BoundReport sparse_degree_bound(std::span<const Support> supports, std::size_t n);
/// deg V(f) <= MV(A_1 u simplex, ..., A_n u simplex) for square systems.
BoundReport mixedvol_degree_bound(std::span<const Support> supports, std::size_t n);

/// Supports of the nonzero polynomials of a system.
std::vector<Support> supports_of(std::span<const MultiPoly> system);

/// Every bound that applies to a system, plus the minimum of each family.
struct BoundSummary {
  std::vector<BoundReport> noether;
  std::vector<BoundReport> degree;
  std::vector<std::string> warnings;

  const BoundReport& best_noether() const;
  const BoundReport& best_degree() const;
};

/// Bezout bounds always; sparse bounds when n <= kMaxVolumeDimension; the
/// mixed-volume bound additionally needs m = n. Throws PreconditionError for
/// an empty or identically zero system.
BoundSummary applicable_bounds(std::span<const MultiPoly> system);

} // namespace pcert
