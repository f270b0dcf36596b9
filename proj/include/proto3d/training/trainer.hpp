#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "proto3d/config.hpp"
#include "proto3d/data/phantom.hpp"
#include "proto3d/episodes/episode.hpp"
#include "proto3d/episodes/splits.hpp"
#include "proto3d/model/atlas.hpp"
#include "proto3d/model/network.hpp"
#include "proto3d/training/losses.hpp"

namespace proto3d {

struct TrainConfig {
  int64_t steps = 2000;
  double learning_rate = 1e-3;
  LossWeights weights;
  uint64_t seed = 1;
  AugmentRanges augmentation;
  /// Steps between checkpoint writes; the final step is always written.
  int64_t checkpoint_every = 500;

  static TrainConfig from_config(const KeyValueConfig& cfg);
  KeyValueConfig to_config() const;
  void validate() const;
};

struct StepRecord {
  int64_t step = 0;
  LossReport losses;
  double wall_time = 0.0;
  /// Dice loss of the few-shot prediction mapped back to query space.
  double few_shot_query_space = 0.0;
  bool skipped = false;
  std::string cls;
  std::string support_id;
  std::string query_id;
};

/// Columns: step, few_shot, seg, align, total, wall_time, then extras.
std::string metrics_csv_header();
std::string metrics_csv_row(const StepRecord& r);

struct TrainResult {
  std::filesystem::path checkpoint;
  std::filesystem::path metrics;
  std::vector<StepRecord> records;
};

/// Base institution whose training subjects form the atlas.
std::string atlas_institution(const SplitSpec& split, uint64_t seed);
Atlas training_atlas(const SplitSpec& split, const SubjectCache& subjects, uint64_t seed);

/// Episodic training. Writes `<out>/checkpoint.bin` and `<out>/metrics.csv`.
/// With `resume`, continues from that checkpoint up to `train.steps`.
TrainResult train(const DatasetManifest& manifest, const SplitSpec& split, const ModelConfig& model,
                  const TrainConfig& train, const std::filesystem::path& out,
                  const std::optional<std::filesystem::path>& resume = std::nullopt);

/// Extractor plus an (all classes + 1) segmentation head trained with mean
/// Dice on base-institution training subjects, two per step.
TrainResult train_supervised(const DatasetManifest& manifest, const SplitSpec& split, const ModelConfig& model,
                             const TrainConfig& train, const std::filesystem::path& out,
                             const std::optional<std::filesystem::path>& resume = std::nullopt);

}  // namespace proto3d
