#pragma once

#include <string>
#include <vector>

#include <torch/torch.h>

#include "proto3d/data/subject.hpp"

namespace proto3d {

/// Per-voxel average of one-hot (background + base classes) masks.
struct Atlas {
  std::string institution;
  std::vector<std::string> classes;
  torch::Tensor probabilities;  // (K + 1, D, H, W), channel 0 background
};

/// Throws ShapeMismatch when subjects disagree in shape, InvalidConfig when empty.
Atlas build_atlas(const std::vector<const LabeledSubject*>& subjects, const std::vector<std::string>& classes);

/// (K + 1, D, H, W) one-hot of `classes`; voxels of other classes count as background.
torch::Tensor one_hot_masks(const LabeledSubject& subject, const std::vector<std::string>& classes);
torch::Tensor one_hot_masks(const std::vector<MaskVolume>& masks);

}  // namespace proto3d
