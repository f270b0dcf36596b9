#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace proto3d {

/// Grid extent in voxels. Memory order is x fastest, then y, then z.
struct GridShape {
  int64_t w = 1;
  int64_t h = 1;
  int64_t d = 1;

  int64_t voxels() const { return w * h * d; }
  int64_t index(int64_t x, int64_t y, int64_t z) const { return x + w * (y + h * z); }
  int64_t extent(int axis) const { return axis == 0 ? w : (axis == 1 ? h : d); }
  bool operator==(const GridShape&) const = default;
};

/// Voxel size in mm along x, y, z.
using Spacing = std::array<double, 3>;

/// Scalar image on a regular grid.
class Volume {
 public:
  Volume() = default;
  explicit Volume(GridShape shape, Spacing spacing = {1.0, 1.0, 1.0}, float fill = 0.0f);
  Volume(GridShape shape, Spacing spacing, std::vector<float> data);

  const GridShape& shape() const { return shape_; }
  const Spacing& spacing() const { return spacing_; }

  float& operator()(int64_t x, int64_t y, int64_t z) { return data_[shape_.index(x, y, z)]; }
  float operator()(int64_t x, int64_t y, int64_t z) const { return data_[shape_.index(x, y, z)]; }

  std::span<float> values() { return data_; }
  std::span<const float> values() const { return data_; }

  /// Throws ShapeMismatch/InvalidConfig when dims, spacing or values are out of contract.
  void validate() const;

  bool operator==(const Volume&) const = default;

 private:
  GridShape shape_;
  Spacing spacing_{1.0, 1.0, 1.0};
  std::vector<float> data_ = std::vector<float>(1, 0.0f);
};

/// Per-voxel weights in [0,1]. When `hard` is set every weight is 0 or 1.
class MaskVolume {
 public:
  MaskVolume() = default;
  explicit MaskVolume(GridShape shape, bool hard = true, float fill = 0.0f);
  MaskVolume(GridShape shape, bool hard, std::vector<float> data);

  const GridShape& shape() const { return shape_; }
  bool hard() const { return hard_; }

  float& operator()(int64_t x, int64_t y, int64_t z) { return data_[shape_.index(x, y, z)]; }
  float operator()(int64_t x, int64_t y, int64_t z) const { return data_[shape_.index(x, y, z)]; }

  std::span<float> values() { return data_; }
  std::span<const float> values() const { return data_; }

  double sum() const;
  int64_t count_nonzero() const;

  /// Voxelwise `value > threshold`.
  MaskVolume binarized(float threshold = 0.5f) const;

  void validate() const;

  bool operator==(const MaskVolume&) const = default;

 private:
  GridShape shape_;
  bool hard_ = true;
  std::vector<float> data_ = std::vector<float>(1, 0.0f);
};

/// Channel-major stack of feature grids, shape (C, D, H, W) in memory.
class FeatureMap {
 public:
  FeatureMap() = default;
  FeatureMap(int64_t channels, GridShape shape, float fill = 0.0f);
  FeatureMap(int64_t channels, GridShape shape, std::vector<float> data);

  int64_t channels() const { return channels_; }
  const GridShape& shape() const { return shape_; }

  std::span<float> channel(int64_t c);
  std::span<const float> channel(int64_t c) const;

  float& operator()(int64_t c, int64_t x, int64_t y, int64_t z) {
    return data_[c * shape_.voxels() + shape_.index(x, y, z)];
  }
  float operator()(int64_t c, int64_t x, int64_t y, int64_t z) const {
    return data_[c * shape_.voxels() + shape_.index(x, y, z)];
  }

  std::span<float> values() { return data_; }
  std::span<const float> values() const { return data_; }

  bool operator==(const FeatureMap&) const = default;

 private:
  int64_t channels_ = 1;
  GridShape shape_;
  std::vector<float> data_ = std::vector<float>(1, 0.0f);
};

}  // namespace proto3d
