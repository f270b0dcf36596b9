#pragma once

#include <array>

namespace proto3d {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<double, 9>;  // row-major

/// Invertible 3D affine point map p -> linear * p + translation.
///
/// Coordinates are normalized grid coordinates: each axis spans [-1, 1] from the
/// first to the last voxel centre, so one transform applies to grids of any
/// resolution (images, labels and downsampled feature maps alike).
struct AffineTransform {
  Mat3 linear{1, 0, 0, 0, 1, 0, 0, 0, 1};
  Vec3 translation{0, 0, 0};

  static AffineTransform identity() { return {}; }
  static AffineTransform translate(const Vec3& t);
  static AffineTransform scale(const Vec3& s);
  /// Rotation by Euler angles (radians) about x, then y, then z.
  static AffineTransform rotate(const Vec3& angles);

  double det() const;
  Vec3 apply(const Vec3& p) const;

  /// Throws SingularTransform when |det| <= 1e-8.
  void check_invertible() const;

  bool operator==(const AffineTransform&) const = default;
};

inline constexpr double kSingularDet = 1e-8;

/// Point map a∘b: applies b first, then a. Warping with compose(a, b) equals
/// warping with b and then with a.
AffineTransform compose(const AffineTransform& a, const AffineTransform& b);

/// Exact inverse map.
AffineTransform invert(const AffineTransform& t);

/// Largest elementwise difference over linear part and translation.
double max_abs_difference(const AffineTransform& a, const AffineTransform& b);

}  // namespace proto3d
