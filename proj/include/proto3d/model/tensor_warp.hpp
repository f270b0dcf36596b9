#pragma once

#include <torch/torch.h>

#include "proto3d/geometry/warp.hpp"

namespace proto3d {

/// Differentiable counterparts of the geometry kernels for (3, 4) affine
/// tensors [linear | translation] in normalized grid coordinates.

torch::Tensor identity_affine(torch::TensorOptions options = torch::kFloat32);
torch::Tensor affine_det(const torch::Tensor& theta);
/// Closed-form (adjugate) inverse; exact for the identity.
torch::Tensor invert_affine(const torch::Tensor& theta);
/// a∘b, matching proto3d::compose.
torch::Tensor compose_affine(const torch::Tensor& a, const torch::Tensor& b);

/// Backward warp with zero fill: out(p) = in(theta^-1(p)). `input` is (D, H, W)
/// or (C, D, H, W); all channels share one map. Trilinear is differentiable in
/// both the input and theta. The identity transform reproduces the input
/// bit-for-bit.
torch::Tensor warp_tensor(const torch::Tensor& input, const torch::Tensor& theta,
                          Interpolation interpolation = Interpolation::trilinear);

}  // namespace proto3d
