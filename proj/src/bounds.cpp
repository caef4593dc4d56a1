#include "pcert/bounds.hpp"
#include "pcert/errors.hpp"

#include <algorithm>
#include <set>

namespace pcert {

namespace {

const char* const kNames[] = {"bezout-noether", "sparse-noether", "bezout-degree", "sparse-degree",
                              "mixedvol-degree"};

void require_positive(long v, const char* what, const char* op) {
  if (v <= 0)
    throw PreconditionError("positive-" + std::string(what),
                            std::string(op) + ": " + what + " must be positive, got " + std::to_string(v));
}

BoundReport bezout(BoundKind kind, long d, long n, long m, const char* op) {
  require_positive(d, "d", op);
  require_positive(n, "n", op);
  require_positive(m, "m", op);
  BoundReport r;
  r.kind = kind;
  r.value = pow(Integer(d), static_cast<unsigned long>(std::min(n, m)));
  r.formula = "d^min(n,m)";
  r.inputs = {{"d", std::to_string(d)}, {"n", std::to_string(n)}, {"m", std::to_string(m)}};
  return r;
}

std::vector<LatticePoint> union_with_simplex(std::span<const Support> supports, std::size_t n, const char* op) {
  if (n == 0)
    throw PreconditionError("positive-n", std::string(op) + ": n must be positive");
  std::set<LatticePoint> all;
  for (const auto& s : supports) {
    if (s.dim != n)
      throw PreconditionError("dimension", std::string(op) + ": support of dimension " + std::to_string(s.dim) +
                                               ", expected " + std::to_string(n));
    all.insert(s.points.begin(), s.points.end());
  }
  for (auto& p : standard_simplex(n))
    all.insert(std::move(p));
  return {all.begin(), all.end()};
}

std::string describe(std::span<const LatticePoint> points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i)
      out += ",";
    out += "(";
    for (std::size_t k = 0; k < points[i].size(); ++k)
      out += (k ? "," : "") + std::to_string(points[i][k]);
    out += ")";
  }
  return out + "}";
}

} // namespace

std::string to_string(BoundKind k) { return kNames[static_cast<int>(k)]; }

BoundKind parse_bound_kind(const std::string& text) {
  for (int i = 0; i < 5; ++i)
    if (text == kNames[i])
      return static_cast<BoundKind>(i);
  throw std::invalid_argument("unknown bound kind '" + text + "'");
}

BoundReport bezout_noether_bound(long d, long n, long m) {
  return bezout(BoundKind::bezout_noether, d, n, m, "bezout_noether_bound");
}

BoundReport bezout_degree_bound(long d, long n, long m) {
  return bezout(BoundKind::bezout_degree, d, n, m, "bezout_degree_bound");
}

BoundReport sparse_degree_bound(std::span<const Support> supports, std::size_t n) {
  const auto points = union_with_simplex(supports, n, "sparse_degree_bound");
  BoundReport r;
  r.kind = BoundKind::sparse_degree;
  r.value = normalized_volume(points, n);
  r.formula = "n! vol(A u simplex)";
  r.inputs = {{"n", std::to_string(n)}, {"support", describe(hull_points(points, n))}};
  return r;
}

BoundReport sparse_noether_bound(std::span<const Support> supports, std::size_t n) {
  BoundReport r = sparse_degree_bound(supports, n);
  const Integer volume = r.value;
  r.kind = BoundKind::sparse_noether;
  r.value = pow(Integer(static_cast<unsigned long>(n)), n + 2) * volume;
  r.formula = "n^(n+2) n! vol(A u simplex)";
  r.inputs["normalized_volume"] = to_string(volume);
  return r;
}

BoundReport mixedvol_degree_bound(std::span<const Support> supports, std::size_t n) {
  if (supports.size() != n)
    throw PreconditionError("square-system", "mixedvol_degree_bound: need m = n supports, got " +
                                                 std::to_string(supports.size()) + " for n = " + std::to_string(n));
  std::vector<Support> augmented;
  std::string described;
  for (const auto& s : supports) {
    const std::span<const Support> one(&s, 1);
    Support a{n, union_with_simplex(one, n, "mixedvol_degree_bound")};
    described += (described.empty() ? "" : ";") + describe(hull_points(a.points, n));
    augmented.push_back(std::move(a));
  }
  BoundReport r;
  r.kind = BoundKind::mixedvol_degree;
  r.value = mixed_volume(augmented);
  r.formula = "MV(A_1 u simplex, ..., A_n u simplex)";
  r.inputs = {{"n", std::to_string(n)}, {"supports", described}};
  return r;
}

std::vector<Support> supports_of(std::span<const MultiPoly> system) {
  std::vector<Support> out;
  for (const auto& f : system) {
    if (f.is_zero())
      continue;
    Support s{f.nvars(), {}};
    for (const auto& [exps, c] : f.terms())
      s.points.emplace_back(exps.begin(), exps.end());
    out.push_back(std::move(s));
  }
  return out;
}

namespace {
const BoundReport& smallest(const std::vector<BoundReport>& reports, const char* what) {
  if (reports.empty())
    throw std::logic_error(std::string("no ") + what + " bound available");
  return *std::min_element(reports.begin(), reports.end(),
                           [](const BoundReport& a, const BoundReport& b) { return a.value < b.value; });
}
} // namespace

const BoundReport& BoundSummary::best_noether() const { return smallest(noether, "Noether"); }
const BoundReport& BoundSummary::best_degree() const { return smallest(degree, "degree"); }

BoundSummary applicable_bounds(std::span<const MultiPoly> system) {
  if (system.empty())
    throw PreconditionError("nonempty", "applicable_bounds: empty system");
  const std::size_t n = system.front().nvars();
  long d = 0;
  for (const auto& f : system) {
    if (f.nvars() != n)
      throw PreconditionError("arity", "applicable_bounds: polynomials in different numbers of variables");
    if (!f.is_zero())
      d = std::max(d, static_cast<long>(f.total_degree()));
  }
  const auto supports = supports_of(system);
  if (supports.empty())
    throw PreconditionError("nonzero", "applicable_bounds: every polynomial is zero");

  BoundSummary s;
  const long m = static_cast<long>(system.size());
  const long nl = static_cast<long>(n);
  if (d == 0)
    s.warnings.push_back("system has only constant polynomials; Bezout bounds use d = 1");
  s.noether.push_back(bezout_noether_bound(std::max(d, 1L), nl, m));
  s.degree.push_back(bezout_degree_bound(std::max(d, 1L), nl, m));
  if (n > kMaxVolumeDimension) {
    s.warnings.push_back("n = " + std::to_string(n) + " exceeds the volume cap " +
                         std::to_string(kMaxVolumeDimension) + "; only Bezout bounds reported");
    return s;
  }
  s.noether.push_back(sparse_noether_bound(supports, n));
  s.degree.push_back(sparse_degree_bound(supports, n));
  if (supports.size() == n && static_cast<std::size_t>(m) == n)
    s.degree.push_back(mixedvol_degree_bound(supports, n));
  else
    s.warnings.push_back("mixed-volume bound needs m = n nonzero polynomials");
  return s;
}

} // namespace pcert
