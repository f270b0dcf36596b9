#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <torch/torch.h>

#include "proto3d/geometry/volume.hpp"

namespace proto3d {

/// Mask sums at or below this leave a prototype undefined.
inline constexpr double kEmptyMaskEpsilon = 1e-6;
/// Norm floor for cosine similarity.
inline constexpr double kNormEpsilon = 1e-8;

/// Axis-aligned window in voxels.
struct WindowBox {
  std::array<int64_t, 3> start{};  // x, y, z
  std::array<int64_t, 3> size{};

  bool operator==(const WindowBox&) const = default;
};

/// Overlapping windows sized `round(ratio * extent)` whose starts advance by
/// half a window (floor, at least 1). A final window is aligned to the far
/// edge when the stride does not land there, so the union covers the grid.
struct WindowGrid {
  std::array<double, 3> ratios{1.0, 1.0, 1.0};
  std::array<int64_t, 3> size{};
  std::array<int64_t, 3> stride{};
  /// Window starts per axis.
  std::array<std::vector<int64_t>, 3> starts;

  int64_t count() const {
    return static_cast<int64_t>(starts[0].size() * starts[1].size() * starts[2].size());
  }
  /// Window k, with x varying fastest.
  WindowBox box(int64_t k) const;
  std::vector<WindowBox> boxes() const;
};

WindowGrid make_window_grid(const GridShape& shape, const std::array<double, 3>& ratios);

/// Prototypes pooled per window; windows whose mask is empty are dropped.
struct LocalPrototypes {
  torch::Tensor vectors;          // (K', C)
  std::vector<int64_t> windows;   // surviving window indices
};

/// Σ F·M / Σ M per channel over the whole grid. `features` is (C, D, H, W),
/// `mask` (D, H, W). Throws EmptyMask when Σ M <= 1e-6.
torch::Tensor masked_average_pool(const torch::Tensor& features, const torch::Tensor& mask);
/// Restricted to one window.
torch::Tensor masked_average_pool(const torch::Tensor& features, const torch::Tensor& mask,
                                  const WindowBox& window);

/// Per-window sums of F·M and M, shapes (K, C) and (K).
std::pair<torch::Tensor, torch::Tensor> window_sums(const torch::Tensor& features,
                                                    const torch::Tensor& mask,
                                                    const WindowGrid& grid);

LocalPrototypes local_prototypes(const torch::Tensor& features, const torch::Tensor& mask,
                                 const WindowGrid& grid);

/// exp(s_c) / (exp(s_c) + exp(s_0)) for cosine similarities s.
double cosine_softmax(const std::vector<double>& feature, const std::vector<double>& class_proto,
                      const std::vector<double>& background_proto);

/// Voxelwise cosine softmax against one class and one background prototype (C).
torch::Tensor predict_query_mask_global(const torch::Tensor& query_features,
                                        const torch::Tensor& class_proto,
                                        const torch::Tensor& background_proto);

/// Same, with each similarity the maximum over a set of prototypes (K, C).
/// Throws NoValidPrototype when either set is empty.
torch::Tensor predict_query_mask_local(const torch::Tensor& query_features,
                                       const torch::Tensor& class_protos,
                                       const torch::Tensor& background_protos);

/// Per-voxel max cosine similarity against rows of `protos` (K, C); (D, H, W).
torch::Tensor max_cosine_similarity(const torch::Tensor& query_features, const torch::Tensor& protos);

}  // namespace proto3d
