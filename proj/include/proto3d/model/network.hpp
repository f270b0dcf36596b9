#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "proto3d/config.hpp"

namespace proto3d {

enum class Variant { proto3d, proto3d_seg, proto3d_seg_align, supervised };

/// "3d", "3d_seg", "3d_seg_align", "supervised".
std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

struct ModelConfig {
  Variant variant = Variant::proto3d_seg_align;
  int64_t feature_channels = 32;
  /// Encoder widths, one per resolution level.
  std::vector<int64_t> widths{16, 32, 64};
  bool instance_norm = true;
  std::array<double, 3> window_ratios{1.0 / 8.0, 1.0 / 8.0, 1.0 / 4.0};
  /// Classes predicted by the segmentation head, background excluded.
  int64_t segmentation_classes = 6;
  int64_t affine_hidden = 64;

  bool use_seg_head() const { return variant != Variant::proto3d; }
  bool use_align_head() const { return variant == Variant::proto3d_seg_align; }
  int64_t depth() const { return static_cast<int64_t>(widths.size()); }

  static ModelConfig from_config(const KeyValueConfig& cfg);
  KeyValueConfig to_config() const;
  /// FNV-1a of the canonical text form, hex.
  std::string hash() const;
  void validate() const;
};

/// conv-norm-LeakyReLU twice.
class ConvBlockImpl : public torch::nn::Module {
 public:
  ConvBlockImpl(int64_t in, int64_t out, bool instance_norm);
  torch::Tensor forward(torch::Tensor x);

 private:
  torch::nn::Conv3d conv1_{nullptr}, conv2_{nullptr};
  torch::nn::InstanceNorm3d norm1_{nullptr}, norm2_{nullptr};
};
TORCH_MODULE(ConvBlock);

/// 3D UNet returning full-resolution features with `feature_channels` channels.
class UNet3dImpl : public torch::nn::Module {
 public:
  UNet3dImpl(const std::vector<int64_t>& widths, int64_t out_channels, bool instance_norm);
  /// (N, 1, D, H, W) -> (N, C_f, D, H, W).
  torch::Tensor forward(torch::Tensor x);

 private:
  std::vector<ConvBlock> down_;
  std::vector<ConvBlock> up_;
  torch::nn::Conv3d out_{nullptr};
};
TORCH_MODULE(UNet3d);

/// 1x1x1 conv to (classes + 1) logits, softmax over channels.
class SegHeadImpl : public torch::nn::Module {
 public:
  SegHeadImpl(int64_t in_channels, int64_t classes);
  torch::Tensor forward(torch::Tensor features);

 private:
  torch::nn::Conv3d conv_{nullptr};
};
TORCH_MODULE(SegHead);

/// Regresses a 12-dof affine from soft base-class masks.
///
/// Output is identity + delta, delta = 0.5 tanh(raw) so every component lies in
/// (-0.5, 0.5). The last layer starts at zero, so a fresh head returns the
/// exact identity. If |det| of the linear part falls under 0.1 the linear delta
/// is shrunk until it does not.
class AffineHeadImpl : public torch::nn::Module {
 public:
  AffineHeadImpl(int64_t in_channels, int64_t hidden);
  /// (N, K+1, D, H, W) -> (N, 3, 4).
  torch::Tensor forward(torch::Tensor masks);

  static constexpr double kDeltaBound = 0.5;
  static constexpr double kMinDet = 0.1;

 private:
  torch::nn::Conv3d conv1_{nullptr}, conv2_{nullptr};
  torch::nn::Linear fc1_{nullptr}, fc2_{nullptr};
};
TORCH_MODULE(AffineHead);

/// Feature extractor plus the optional heads of a variant.
class ProtoNetImpl : public torch::nn::Module {
 public:
  explicit ProtoNetImpl(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }
  UNet3d& extractor() { return extractor_; }
  SegHead& seg_head();
  AffineHead& affine_head();
  bool has_seg_head() const { return !seg_head_.is_empty(); }
  bool has_affine_head() const { return !affine_head_.is_empty(); }

 private:
  ModelConfig config_;
  UNet3d extractor_{nullptr};
  SegHead seg_head_{nullptr};
  AffineHead affine_head_{nullptr};
};
TORCH_MODULE(ProtoNet);

/// Builds the model after seeding torch's generator with `seed`.
ProtoNet make_model(const ModelConfig& config, uint64_t seed);

struct ParameterCount {
  int64_t extractor = 0;
  int64_t seg_head = 0;
  int64_t affine_head = 0;
  int64_t total() const { return extractor + seg_head + affine_head; }
};

ParameterCount count_parameters(ProtoNet& model);

}  // namespace proto3d
