#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <torch/torch.h>

#include "proto3d/config.hpp"
#include "proto3d/model/network.hpp"

namespace proto3d {

inline constexpr const char* kCheckpointFormat = "proto3d-checkpoint/1";

/// Everything stored next to the parameters.
struct CheckpointData {
  ModelConfig model;
  int64_t step = 0;
  uint64_t seed = 0;
  std::string rng_state;
  /// Free-form run settings (training config, atlas institution, ...).
  KeyValueConfig run;
  /// Float tensors that are not parameters, e.g. "atlas".
  std::map<std::string, torch::Tensor> extra;
  /// Serialized optimizer state, empty when absent.
  std::string optimizer_state;
};

/// Layout: 8-byte magic, little-endian uint64 header length, JSON header,
/// then raw float32 payloads at the offsets listed in the header. The file is
/// written to a temporary name and renamed into place.
void write_checkpoint(const std::filesystem::path& path, ProtoNet& model, const CheckpointData& data);

struct LoadedCheckpoint {
  ProtoNet model{nullptr};
  CheckpointData data;
};

/// Throws ConfigMismatch when the stored hash disagrees with the stored config
/// or with `expected`, FormatError on a malformed file, IoError when missing.
LoadedCheckpoint read_checkpoint(const std::filesystem::path& path, const ModelConfig* expected = nullptr);

std::string serialize_optimizer(torch::optim::Optimizer& optimizer);
void restore_optimizer(torch::optim::Optimizer& optimizer, const std::string& blob);

}  // namespace proto3d
