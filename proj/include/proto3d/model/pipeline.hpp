#pragma once

#include <vector>

#include <torch/torch.h>

#include "proto3d/episodes/episode.hpp"
#include "proto3d/model/network.hpp"
#include "proto3d/model/prototypes.hpp"

namespace proto3d {

struct MemberTensors {
  torch::Tensor image;  // (D, H, W)
  torch::Tensor mask;   // (D, H, W) binary mask of the episode class
  torch::Tensor base;   // (K + 1, D, H, W) one-hot base classes, may be undefined
};

struct EpisodeTensors {
  MemberTensors support;
  MemberTensors query;
};

EpisodeTensors episode_tensors(const Episode& episode);

/// Per-image outputs that do not depend on the episode class.
struct Encoding {
  /// (C, D, H, W); in atlas space when the align head is on.
  torch::Tensor features;
  /// (K + 1, D, H, W) seg-head output in image space.
  torch::Tensor base_pred;
  /// Seg-head output warped by theta, align head only.
  torch::Tensor warped_base;
  /// (3, 4), align head only.
  torch::Tensor theta;
  /// Warp of an all-ones volume by theta, align head only.
  torch::Tensor validity;

  bool aligned() const { return theta.defined(); }
};

/// Runs the extractor and heads on a batch of (D, H, W) images.
std::vector<Encoding> encode(ProtoNet& model, const std::vector<torch::Tensor>& images);

struct FewShotPrediction {
  /// Soft query mask in the working space (atlas space when aligned).
  torch::Tensor working;
  /// Soft query mask in query image space.
  torch::Tensor prediction;
};

/// Local-prototype prediction for one support/query pair. Throws
/// NoValidPrototype when no window of the support contains the class.
FewShotPrediction predict_few_shot(const Encoding& support, const torch::Tensor& support_mask,
                                   const Encoding& query, const WindowGrid& grid);

struct EpisodeOutput {
  Encoding support;
  Encoding query;
  FewShotPrediction few_shot;
  /// Query class mask in the working space.
  torch::Tensor query_mask_working;
};

/// Support and query are encoded as one batch of two.
EpisodeOutput forward_episode(ProtoNet& model, const EpisodeTensors& episode, const WindowGrid& grid);

}  // namespace proto3d
