#pragma once

#include <optional>

#include <torch/torch.h>

namespace proto3d {

inline constexpr double kDiceSmoothing = 1e-5;

/// 1 - (2 Σ p t + δ) / (Σ p + Σ t + δ). Throws ShapeMismatch.
torch::Tensor dice_loss(const torch::Tensor& pred, const torch::Tensor& target);

/// Mean binary Dice loss over channels 1..K of (K + 1, ...) tensors.
torch::Tensor multiclass_dice_loss(const torch::Tensor& pred, const torch::Tensor& target);

/// Query term plus support term. Undefined predictions mean the head is off:
/// throws HeadDisabled.
torch::Tensor seg_loss(const torch::Tensor& query_pred, const torch::Tensor& query_target,
                       const torch::Tensor& support_pred, const torch::Tensor& support_target);

/// Warped base predictions of query and support against the atlas.
torch::Tensor align_loss(const torch::Tensor& query_warped, const torch::Tensor& support_warped,
                         const torch::Tensor& atlas);

struct LossWeights {
  double seg = 1.0;
  double align = 1.0;
};

struct LossReport {
  double few_shot = 0.0;
  std::optional<double> seg;
  std::optional<double> align;
  double total = 0.0;
};

/// Total objective with terms of zero weight left out of the graph.
torch::Tensor total_loss(const torch::Tensor& few_shot, const torch::Tensor& seg, const torch::Tensor& align,
                         const LossWeights& weights, LossReport& report);

}  // namespace proto3d
