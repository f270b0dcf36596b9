#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "proto3d/data/phantom.hpp"

namespace proto3d {

/// Pair of novel classes for a fold (1..4): consecutive entries of the class list.
std::vector<std::string> fold_classes(const std::vector<std::string>& classes, int fold);

/// Class and institution partition plus per-institution train/test subjects.
struct SplitSpec {
  int fold = 1;
  uint64_t seed = 0;
  std::vector<std::string> base_classes;
  std::vector<std::string> novel_classes;
  std::vector<std::string> base_institutions;
  std::vector<std::string> novel_institutions;
  /// Keyed by base institution.
  std::map<std::string, std::vector<std::string>> train_subjects;
  std::map<std::string, std::vector<std::string>> test_subjects;
  /// All subjects of the novel institutions.
  std::vector<std::string> novel_institution_subjects;

  /// Base dataset: training subjects of base institutions.
  std::vector<std::string> base_training_subjects() const;
  bool is_base_institution(const std::string& inst) const;

  /// Throws InvalidConfig when a partition invariant is broken.
  void validate() const;

  std::string to_json() const;
  static SplitSpec from_json(const std::string& text);
  void save(const std::filesystem::path& path) const;
  static SplitSpec load(const std::filesystem::path& path);

  bool operator==(const SplitSpec&) const = default;
};

/// Errors: UnknownInstitution, BadFold.
SplitSpec make_splits(const DatasetManifest& manifest, const std::string& novel_institution, int fold,
                      uint64_t seed);

/// Thread-safe lazy loader of subjects listed in a manifest.
class SubjectCache {
 public:
  explicit SubjectCache(const DatasetManifest& manifest) : manifest_(manifest) {}
  std::shared_ptr<const LabeledSubject> get(const std::string& id) const;
  const DatasetManifest& manifest() const { return manifest_; }

 private:
  const DatasetManifest& manifest_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const LabeledSubject>> cache_;
};

}  // namespace proto3d
