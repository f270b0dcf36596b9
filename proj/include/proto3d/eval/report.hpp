#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "proto3d/data/phantom.hpp"
#include "proto3d/eval/evaluate.hpp"

namespace proto3d {

struct ResultSet {
  std::filesystem::path csv;
  std::vector<EpisodeResult> rows;
};

/// Every `results.csv` below `dir`, sorted by path.
std::vector<ResultSet> find_result_sets(const std::filesystem::path& dir);

/// Mid-slice overlay: image in grey, prediction only red, truth only green,
/// both yellow. One 1x1 rect per voxel at (x, y).
std::string overlay_svg(const Volume& image, const MaskVolume& truth, const MaskVolume& prediction, int64_t z);
/// Mean Dice per variant and scenario.
std::string scenario_chart_svg(const std::vector<EpisodeResult>& rows);

struct ReportOutput {
  std::filesystem::path markdown;
  std::vector<std::filesystem::path> figures;
};

/// Writes `<out>/report.md` and `<out>/figures/`. Overlays need `manifest`.
/// Throws EmptyResults when `dir` holds no results.
ReportOutput write_report(const std::filesystem::path& dir, const std::filesystem::path& out,
                          const std::optional<DatasetManifest>& manifest, int overlays_per_set = 2);

}  // namespace proto3d
