#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "proto3d/episodes/episode.hpp"
#include "proto3d/model/checkpoint.hpp"

namespace proto3d {

/// 2|P∩T| / (|P| + |T|) for hard masks; 1.0 when both are empty.
double dice_score(const MaskVolume& pred, const MaskVolume& target);
/// Same on tensors holding 0/1 values.
double dice_score(const torch::Tensor& pred, const torch::Tensor& target);

struct EpisodeResult {
  std::string variant;
  uint64_t run_seed = 0;
  int fold = 1;
  std::string cls;
  std::string query_id;
  std::string query_institution;
  std::string support_id;
  std::string support_institution;
  /// "base" or "novel" support institution.
  std::string support_scenario;
  double dice = 0.0;

  /// Identifies the episode within a run: seed, fold, class, query, support.
  std::string key() const;
  bool operator==(const EpisodeResult&) const = default;
};

struct EvaluateOptions {
  double threshold = 0.5;
  /// When set, hard predictions are written as `<dir>/<index>.raw` (uint8).
  std::optional<std::filesystem::path> predictions_dir;
};

/// Runs every enumerated evaluation episode with frozen parameters.
std::vector<EpisodeResult> evaluate(LoadedCheckpoint& checkpoint, const DatasetManifest& manifest,
                                    const SplitSpec& split, const EvaluateOptions& options = {});

std::string results_csv(const std::vector<EpisodeResult>& rows);
std::vector<EpisodeResult> parse_results_csv(const std::string& text);
void write_results_csv(const std::filesystem::path& path, const std::vector<EpisodeResult>& rows);
std::vector<EpisodeResult> read_results_csv(const std::filesystem::path& path);

}  // namespace proto3d
