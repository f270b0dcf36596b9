#pragma once

#include <torch/torch.h>

#include "proto3d/geometry/affine.hpp"
#include "proto3d/geometry/volume.hpp"

namespace proto3d {

/// (D, H, W) tensor sharing the x-fastest memory layout of the volume.
torch::Tensor to_tensor(const Volume& v, torch::Dtype dtype = torch::kFloat32);
torch::Tensor to_tensor(const MaskVolume& m, torch::Dtype dtype = torch::kFloat32);
/// (C, D, H, W).
torch::Tensor to_tensor(const FeatureMap& f, torch::Dtype dtype = torch::kFloat32);

/// Accepts (D, H, W); values are clamped to [0, 1].
MaskVolume to_mask(const torch::Tensor& t, bool hard = false);
/// Accepts (C, D, H, W).
FeatureMap to_feature_map(const torch::Tensor& t);

GridShape grid_shape_of(const torch::Tensor& t);

/// (3, 4) matrix [linear | translation].
torch::Tensor affine_to_tensor(const AffineTransform& t, torch::Dtype dtype = torch::kFloat32);
AffineTransform affine_from_tensor(const torch::Tensor& theta);

}  // namespace proto3d
