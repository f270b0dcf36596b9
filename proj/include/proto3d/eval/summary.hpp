#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "proto3d/eval/evaluate.hpp"

namespace proto3d {

struct GroupStats {
  int64_t count = 0;
  double mean = 0.0;
  /// Population standard deviation.
  double std = 0.0;
};

GroupStats group_stats(const std::vector<double>& values);

/// One (variant, fold, scenario) cell of the results table.
struct ScenarioSummary {
  std::string variant;
  int fold = 1;
  std::string scenario;  // all, base or novel
  GroupStats dice;
  std::map<std::string, double> class_means;
};

/// Throws EmptyResults on an empty row set.
std::vector<ScenarioSummary> summarize(const std::vector<EpisodeResult>& rows);

std::string summary_csv(const std::vector<ScenarioSummary>& summaries);
/// Variants as rows, (fold, scenario) as columns, mean Dice in percent.
std::string summary_table(const std::vector<ScenarioSummary>& summaries);

inline constexpr int kPermutationResamples = 10000;
inline constexpr uint64_t kPermutationSeed = 20220607;

/// Two-sided paired sign-flip permutation test on per-episode Dice
/// differences. Throws KeyMismatch when the episode keys differ.
double paired_significance(const std::vector<EpisodeResult>& a, const std::vector<EpisodeResult>& b,
                           int resamples = kPermutationResamples, uint64_t seed = kPermutationSeed);

}  // namespace proto3d
