#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "proto3d/config.hpp"
#include "proto3d/data/subject.hpp"
#include "proto3d/geometry/affine.hpp"

namespace proto3d {

/// Class names in fold order: folds pair consecutive entries.
const std::vector<std::string>& default_class_names();

/// Knobs of the procedural multi-institution phantom.
///
/// Each subject is a fixed layout of pelvic-like structures in a 192x192x120 mm
/// field of view. Subjects jitter the structures slightly; institutions add one
/// systematic affine pose offset and one intensity transform shared by all of
/// their subjects.
struct GenerationConfig {
  GridShape shape{64, 64, 16};
  Spacing spacing{3.0, 3.0, 7.5};
  int institutions = 4;
  int subjects_per_institution = 8;
  int classes = 8;
  uint64_t seed = 7;

  /// Multiplies the three pose ranges below.
  double institution_shift = 1.0;
  double institution_rotation_deg = 10.0;
  double institution_translation_mm = 12.0;
  double institution_log_scale = 0.08;
  /// Multiplies gamma, bias and noise ranges.
  double intensity_shift = 1.0;

  double structure_jitter_mm = 2.0;
  double subject_translation_mm = 3.0;
  double subject_rotation_deg = 2.0;

  static GenerationConfig from_config(const KeyValueConfig& cfg);
  KeyValueConfig to_config() const;

  /// Upper bound on how far subject jitter moves a structure centroid (mm).
  double jitter_bound_mm() const;

  /// Throws InvalidConfig on counts below minimums or a grid too small for the anatomy.
  void validate() const;
};

/// Per-institution systematic shift, drawn once from the dataset seed.
struct InstitutionProfile {
  std::string id;
  /// Pose of the anatomy in scanner space, in mm about the grid centre.
  AffineTransform pose;
  double gamma = 1.0;
  std::array<double, 3> bias{0, 0, 0};
  double noise_sigma = 0.0;
};

InstitutionProfile institution_profile(const GenerationConfig& config, int institution);
std::string institution_id(int institution);
std::string subject_id(int institution, int subject);

/// Deterministic in (config, institution, subject).
LabeledSubject generate_subject(const GenerationConfig& config, int institution, int subject);

struct SubjectRecord {
  std::string id;
  std::string institution;
  /// Relative to the dataset root.
  std::string image;
  std::string labels;
  std::string meta;
};

struct DatasetManifest {
  std::filesystem::path root;
  uint64_t seed = 0;
  GridShape shape;
  Spacing spacing{};
  std::vector<std::string> classes;
  std::vector<std::string> institutions;
  std::vector<SubjectRecord> subjects;
  KeyValueConfig generation;

  const SubjectRecord& subject(const std::string& id) const;
  std::vector<std::string> subjects_of(const std::string& institution) const;
  LabeledSubject load(const std::string& id) const;

  /// Serialized form; excludes `root` so manifests are byte-stable.
  std::string to_json() const;
  static DatasetManifest from_json(const std::string& text, const std::filesystem::path& root);
};

inline constexpr const char* kDatasetFormat = "proto3d-dataset/1";

/// Generates every subject under `<out>/subjects/` and writes `<out>/manifest.json`.
DatasetManifest generate_dataset(const GenerationConfig& config, const std::filesystem::path& out);
DatasetManifest load_manifest(const std::filesystem::path& root);

}  // namespace proto3d
