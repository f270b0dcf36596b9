#pragma once

#include <span>

#include "proto3d/geometry/affine.hpp"
#include "proto3d/geometry/volume.hpp"

namespace proto3d {

enum class Interpolation { trilinear, nearest };

/// Affine map from output voxel indices to the input voxel coordinates they
/// sample, i.e. the inverse of `t` expressed in voxel units of `shape`.
struct VoxelPullMap {
  Mat3 linear{};
  Vec3 offset{};

  Vec3 source(double x, double y, double z) const {
    return {linear[0] * x + linear[1] * y + linear[2] * z + offset[0],
            linear[3] * x + linear[4] * y + linear[5] * z + offset[1],
            linear[6] * x + linear[7] * y + linear[8] * z + offset[2]};
  }
};

VoxelPullMap voxel_pull_map(const AffineTransform& t, const GridShape& shape);

/// Normalized coordinate of voxel index `i` on an axis of `n` voxels.
double normalized_coordinate(double i, int64_t n);

/// Translation in normalized units that moves content by `voxels` along each axis.
Vec3 voxels_to_normalized(const Vec3& voxels, const GridShape& shape);

/// Resamples one channel: out(p) = in(t^-1(p)), zero outside the input grid.
void warp_channel(std::span<const float> in, std::span<float> out, const GridShape& shape,
                  const VoxelPullMap& map, Interpolation interpolation);

/// Moves the content of `v` by the point map `t` (backward warping, zero fill).
Volume warp_volume(const Volume& v, const AffineTransform& t,
                   Interpolation interpolation = Interpolation::trilinear);
/// Nearest keeps a hard mask hard; trilinear yields a soft mask.
MaskVolume warp_volume(const MaskVolume& m, const AffineTransform& t,
                       Interpolation interpolation = Interpolation::nearest);
/// Every channel shares one spatial map.
FeatureMap warp_volume(const FeatureMap& f, const AffineTransform& t,
                       Interpolation interpolation = Interpolation::trilinear);

}  // namespace proto3d

namespace proto3d {

/// Re-expresses a point map given in mm about the grid centre as a map in
/// normalized grid coordinates of `shape`.
AffineTransform physical_to_normalized(const AffineTransform& mm_map, const GridShape& shape,
                                       const Spacing& spacing);

}  // namespace proto3d
