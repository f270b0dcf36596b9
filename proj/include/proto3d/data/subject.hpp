#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "proto3d/geometry/volume.hpp"

namespace proto3d {

/// Image, hard per-class masks and the institution that acquired it.
struct LabeledSubject {
  std::string id;
  std::string institution;
  Volume image;
  /// Class order used for the packed label payload (label k+1 = classes[k]).
  std::vector<std::string> classes;
  std::map<std::string, MaskVolume> masks;
  uint64_t seed = 0;

  const MaskVolume& mask(const std::string& cls) const;

  /// Packs masks into one label per voxel (0 = background).
  std::vector<uint8_t> label_map() const;
  static std::map<std::string, MaskVolume> masks_from_labels(const std::vector<uint8_t>& labels,
                                                            const GridShape& shape,
                                                            const std::vector<std::string>& classes);

  /// Shapes agree, masks hard and pairwise disjoint.
  void validate() const;

  bool operator==(const LabeledSubject&) const = default;
};

struct SubjectFiles {
  std::filesystem::path image;
  std::filesystem::path labels;
  std::filesystem::path meta;
};

inline constexpr const char* kSubjectFormat = "proto3d-subject/1";

/// Writes `<dir>/<id>/{image.raw,labels.raw,meta.json}`.
SubjectFiles save_subject(const LabeledSubject& s, const std::filesystem::path& dir);
LabeledSubject load_subject(const SubjectFiles& files);
/// Loads from a subject directory holding the three files.
LabeledSubject load_subject(const std::filesystem::path& subject_dir);

}  // namespace proto3d
