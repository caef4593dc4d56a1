#include "pcert/polytope.hpp"
#include "pcert/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace pcert {

namespace {

using i128 = __int128;

Integer to_integer(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return negative ? Integer(-r) : r;
}

i128 det(std::vector<std::vector<i128>> a) {
  const std::size_t d = a.size();
  switch (d) {
  case 0:
    return 1;
  case 1:
    return a[0][0];
  case 2:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  default:
    break;
  }
  // Cofactor expansion along the first row; d <= 4 keeps this cheap.
  i128 total = 0;
  for (std::size_t c = 0; c < d; ++c) {
    if (a[0][c] == 0)
      continue;
    std::vector<std::vector<i128>> minor;
    for (std::size_t r = 1; r < d; ++r) {
      std::vector<i128> row;
      for (std::size_t k = 0; k < d; ++k)
        if (k != c)
          row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const i128 term = a[0][c] * det(std::move(minor));
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

int sign(i128 v) { return (v > 0) - (v < 0); }

void check_points(std::span<const LatticePoint> points, std::size_t dim) {
  if (dim > kMaxVolumeDimension)
    throw PreconditionError("dimension-cap", "volume: dimension " + std::to_string(dim) + " exceeds the cap of " +
                                                 std::to_string(kMaxVolumeDimension));
  if (points.empty())
    throw PreconditionError("nonempty", "volume: empty point set");
  for (const auto& p : points) {
    if (p.size() != dim)
      throw PreconditionError("dimension", "volume: point of length " + std::to_string(p.size()) +
                                               " in dimension " + std::to_string(dim));
    for (auto c : p)
      if (c > kMaxCoordinate || c < -kMaxCoordinate)
        throw PreconditionError("coordinate-range", "volume: coordinate " + std::to_string(c) + " out of range");
  }
}

// Placing triangulation of conv(points). Simplices are added as points are
// inserted, so the accumulated |det| is the normalized volume.
class Hull {
public:
  Hull(std::vector<LatticePoint> pts, std::size_t dim) : pts_(std::move(pts)), dim_(dim) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    build();
  }

  bool full_dimensional() const { return full_; }
  const Integer& volume() const { return volume_; }

  /// Vertices of conv(points); all points when the hull is lower dimensional.
  std::vector<LatticePoint> vertices() const {
    if (!full_)
      return pts_;
    // A boundary point is a vertex iff its incident facet normals span R^dim;
    // a point inside an edge or face has all of them orthogonal to that face.
    std::map<int, std::vector<std::vector<Rational>>> normals;
    for (const auto& f : facets_) {
      if (!f.alive)
        continue;
      const auto n = normal(f.v);
      for (int i : f.v)
        normals[i].push_back(n);
    }
    std::vector<LatticePoint> out;
    for (auto& [i, rows] : normals)
      if (rank(std::move(rows)) == dim_)
        out.push_back(pts_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  struct Facet {
    std::vector<int> v;
    int inside = 0;
    bool alive = true;
  };

  i128 orient(const std::vector<int>& face, int p) const {
    std::vector<std::vector<i128>> rows;
    const auto& base = pts_[face[0]];
    auto diff = [&](const LatticePoint& q) {
      std::vector<i128> r(dim_);
      for (std::size_t k = 0; k < dim_; ++k)
        r[k] = static_cast<i128>(q[k]) - base[k];
      return r;
    };
    for (std::size_t i = 1; i < face.size(); ++i)
      rows.push_back(diff(pts_[face[i]]));
    rows.push_back(diff(pts_[p]));
    return det(std::move(rows));
  }

  std::vector<Rational> normal(const std::vector<int>& face) const {
    const auto& base = pts_[face[0]];
    std::vector<Rational> n(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      std::vector<std::vector<i128>> rows;
      for (std::size_t i = 1; i < face.size(); ++i) {
        std::vector<i128> r(dim_);
        for (std::size_t c = 0; c < dim_; ++c)
          r[c] = static_cast<i128>(pts_[face[i]][c]) - base[c];
        rows.push_back(std::move(r));
      }
      std::vector<i128> unit(dim_, 0);
      unit[k] = 1;
      rows.push_back(std::move(unit));
      n[k] = Rational(to_integer(det(std::move(rows))));
    }
    return n;
  }

  static std::size_t rank(std::vector<std::vector<Rational>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      auto pivot = std::find_if(rows.begin() + static_cast<long>(r), rows.end(),
                                [c](const auto& row) { return sgn(row[c]) != 0; });
      if (pivot == rows.end())
        continue;
      std::swap(*pivot, rows[r]);
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0)
          continue;
        const Rational factor = rows[i][c] / rows[r][c];
        for (std::size_t k = c; k < cols; ++k)
          rows[i][k] -= factor * rows[r][k];
      }
      ++r;
    }
    return r;
  }

  // Greedy affinely independent subset, with exact rank tests.
  std::vector<int> initial_simplex() const {
    std::vector<int> chosen{0};
    std::vector<std::vector<Rational>> basis; // row echelon, pivot columns in `pivots`
    std::vector<std::size_t> pivots;
    for (int i = 1; i < static_cast<int>(pts_.size()) && chosen.size() <= dim_; ++i) {
      std::vector<Rational> r(dim_);
      for (std::size_t k = 0; k < dim_; ++k)
        r[k] = Rational(static_cast<long>(pts_[i][k] - pts_[0][k]));
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (sgn(r[pivots[b]]) != 0) {
          const Rational factor = r[pivots[b]] / basis[b][pivots[b]];
          for (std::size_t k = 0; k < dim_; ++k)
            r[k] -= factor * basis[b][k];
        }
      auto nz = std::find_if(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; });
      if (nz == r.end())
        continue;
      pivots.push_back(static_cast<std::size_t>(nz - r.begin()));
      basis.push_back(std::move(r));
      chosen.push_back(i);
    }
    return chosen;
  }

  void add_facet(std::vector<int> v, int opposite) {
    std::sort(v.begin(), v.end());
    Facet f{std::move(v), 0, true};
    f.inside = sign(orient(f.v, opposite));
    facets_.push_back(std::move(f));
  }

  void build() {
    if (dim_ == 0) {
      full_ = true;
      volume_ = 1;
      return;
    }
    const std::vector<int> simplex = initial_simplex();
    if (simplex.size() != dim_ + 1) {
      volume_ = 0;
      return;
    }
    full_ = true;
    {
      std::vector<int> face(simplex.begin(), simplex.end() - 1);
      volume_ = to_integer(orient(face, simplex.back()));
      volume_ = abs(volume_);
    }
    for (std::size_t skip = 0; skip <= dim_; ++skip) {
      std::vector<int> face;
      for (std::size_t k = 0; k <= dim_; ++k)
        if (k != skip)
          face.push_back(simplex[k]);
      add_facet(std::move(face), simplex[skip]);
    }
    const std::set<int> in_simplex(simplex.begin(), simplex.end());
    for (int p = 0; p < static_cast<int>(pts_.size()); ++p)
      if (!in_simplex.count(p))
        insert(p);
  }

  void insert(int p) {
    // ridge -> (count among visible facets, dropped vertex)
    std::map<std::vector<int>, std::pair<int, int>> ridges;
    std::vector<std::size_t> visible;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      Facet& f = facets_[i];
      if (!f.alive)
        continue;
      const i128 o = orient(f.v, p);
      if (sign(o) != -f.inside)
        continue;
      visible.push_back(i);
      volume_ += to_integer(o < 0 ? -o : o);
      for (std::size_t drop = 0; drop < f.v.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t k = 0; k < f.v.size(); ++k)
          if (k != drop)
            ridge.push_back(f.v[k]);
        auto& entry = ridges[ridge];
        ++entry.first;
        entry.second = f.v[drop];
      }
    }
    for (std::size_t i : visible)
      facets_[i].alive = false;
    for (auto& [ridge, entry] : ridges) {
      if (entry.first != 1)
        continue;
      std::vector<int> face = ridge;
      face.push_back(p);
      add_facet(std::move(face), entry.second);
    }
    const auto alive = std::count_if(facets_.begin(), facets_.end(), [](const Facet& f) { return f.alive; });
    if (facets_.size() > static_cast<std::size_t>(4 * alive + 64))
      std::erase_if(facets_, [](const Facet& f) { return !f.alive; });
  }

  std::vector<LatticePoint> pts_;
  std::size_t dim_;
  bool full_ = false;
  Integer volume_ = 0;
  std::vector<Facet> facets_;
};

std::vector<LatticePoint> reduce(std::vector<LatticePoint> points, std::size_t dim) {
  return Hull(std::move(points), dim).vertices();
}

void check_supports(std::span<const Support> supports) {
  const std::size_t n = supports.size();
  if (n == 0)
    throw PreconditionError("support-count", "mixed_volume: no supports");
  for (const auto& s : supports) {
    if (s.dim != n)
      throw PreconditionError("support-count", "mixed_volume: need exactly n = dim supports, got " +
                                                   std::to_string(n) + " in dimension " + std::to_string(s.dim));
    check_points(s.points, s.dim);
  }
}

Integer subset_volume(const std::vector<std::vector<LatticePoint>>& reduced, unsigned mask, std::size_t n) {
  std::vector<LatticePoint> sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mask & (1u << i)))
      continue;
    sum = sum.empty() ? reduced[i] : reduce(minkowski_sum(sum, reduced[i]), n);
  }
  return Hull(std::move(sum), n).volume();
}

Integer combine(const std::vector<Integer>& volumes, std::size_t n) {
  Integer mv = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if ((n - size) % 2 == 0)
      mv += volumes[mask];
    else
      mv -= volumes[mask];
  }
  // The volumes are normalized (scaled by n!); the alternating sum is n! MV.
  Integer nf = 1;
  for (std::size_t k = 2; k <= n; ++k)
    nf *= static_cast<unsigned long>(k);
  return mv / nf;
}

std::vector<std::vector<LatticePoint>> reduced_supports(std::span<const Support> supports) {
  std::vector<std::vector<LatticePoint>> out;
  for (const auto& s : supports)
    out.push_back(reduce(s.points, s.dim));
  return out;
}

} // namespace

std::vector<LatticePoint> standard_simplex(std::size_t dim) {
  std::vector<LatticePoint> out{LatticePoint(dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) {
    LatticePoint e(dim, 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

Integer normalized_volume(std::span<const LatticePoint> points, std::size_t dim) {
  check_points(points, dim);
  return Hull({points.begin(), points.end()}, dim).volume();
}

std::vector<LatticePoint> hull_points(std::span<const LatticePoint> points, std::size_t dim) {
  check_points(points, dim);
  return reduce({points.begin(), points.end()}, dim);
}

std::vector<LatticePoint> minkowski_sum(std::span<const LatticePoint> a, std::span<const LatticePoint> b) {
  std::set<LatticePoint> out;
  for (const auto& p : a)
    for (const auto& q : b) {
      if (p.size() != q.size())
        throw PreconditionError("dimension", "minkowski_sum: mismatched point lengths");
      LatticePoint s(p.size());
      for (std::size_t k = 0; k < p.size(); ++k)
        s[k] = p[k] + q[k];
      out.insert(std::move(s));
    }
  return {out.begin(), out.end()};
}

Integer mixed_volume(std::span<const Support> supports) {
  check_supports(supports);
  const std::size_t n = supports.size();
  const auto reduced = reduced_supports(supports);
  const int masks = 1 << n;
  std::vector<Integer> volumes(masks);
#pragma omp parallel for schedule(dynamic)
  for (int mask = 1; mask < masks; ++mask)
    volumes[mask] = subset_volume(reduced, static_cast<unsigned>(mask), n);
  return combine(volumes, n);
}

namespace serial {

Integer mixed_volume(std::span<const Support> supports) {
  check_supports(supports);
  const std::size_t n = supports.size();
  const auto reduced = reduced_supports(supports);
  std::vector<Integer> volumes(std::size_t{1} << n);
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    volumes[mask] = subset_volume(reduced, mask, n);
  return combine(volumes, n);
}

} // namespace serial

} // namespace pcert
