#pragma once

#include "pcert/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pcert {

using LatticePoint = std::vector<std::int64_t>;

/// Largest ambient dimension handled by the exact volume routines.
inline constexpr std::size_t kMaxVolumeDimension = 4;

/// Coordinates must stay within this magnitude so the 128-bit determinant
/// arithmetic inside the hull cannot overflow.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 20;

/// A finite set of exponent vectors, all of length `dim`.
struct Support {
  std::size_t dim = 0;
  std::vector<LatticePoint> points;
};

/// Vertices of the standard simplex: the origin and the unit vectors.
std::vector<LatticePoint> standard_simplex(std::size_t dim);

/// dim! * vol_dim(conv(points)). An integer for lattice points; zero when the
/// hull is lower dimensional. Throws PreconditionError if dim exceeds
/// kMaxVolumeDimension, the set is empty or a coordinate is out of range.
Integer normalized_volume(std::span<const LatticePoint> points, std::size_t dim);

/// Vertices of conv(points), sorted. Returns the input (deduplicated and
/// sorted) when the hull is lower dimensional.
std::vector<LatticePoint> hull_points(std::span<const LatticePoint> points, std::size_t dim);

/// {a + b}, deduplicated and sorted.
std::vector<LatticePoint> minkowski_sum(std::span<const LatticePoint> a, std::span<const LatticePoint> b);

/// Mixed volume normalized so MV(simplex, ..., simplex) = 1, by
/// inclusion-exclusion over the 2^n - 1 partial Minkowski sums. Requires
/// exactly n = dim supports. The subset volumes run as OpenMP tasks.
Integer mixed_volume(std::span<const Support> supports);

namespace serial {
/// Reference loop for mixed_volume.
Integer mixed_volume(std::span<const Support> supports);
} // namespace serial

} // namespace pcert
