#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proto3d/episodes/splits.hpp"
#include "proto3d/geometry/affine.hpp"
#include "proto3d/random.hpp"

namespace proto3d {

/// One side of an episode. `base_masks` follows SplitSpec::base_classes and is
/// filled for training episodes only.
struct EpisodeMember {
  std::string subject_id;
  std::string institution;
  Volume image;
  MaskVolume mask;
  std::vector<MaskVolume> base_masks;
};

struct Episode {
  std::string cls;
  EpisodeMember support;
  EpisodeMember query;
};

enum class Scenario { all, base, novel };
const char* scenario_name(Scenario s);

/// Evaluation episode by reference; materialized on demand.
struct EvalEpisodeRef {
  int fold = 1;
  std::string cls;
  std::string query_id;
  std::string query_institution;
  std::string support_id;
  std::string support_institution;
  /// Always contains `all`, plus exactly one of `base`/`novel`.
  std::vector<Scenario> scenarios;

  std::string key() const;
  bool in(Scenario s) const;
};

/// Class uniform over base classes, support != query drawn from base training
/// subjects. Throws InsufficientSubjects with fewer than two subjects.
Episode sample_training_episode(const SplitSpec& split, const SubjectCache& subjects, Rng& rng);

/// Every (novel class, novel-institution query) pair against one support per
/// institution. Base-institution supports come from that institution's test
/// subjects; novel-institution supports exclude the query.
std::vector<EvalEpisodeRef> enumerate_eval_episodes(const SplitSpec& split,
                                                    const DatasetManifest& manifest);

Episode materialize(const EvalEpisodeRef& ref, const SplitSpec& split, const SubjectCache& subjects);

/// Binary mask of `cls` plus base-class masks.
EpisodeMember make_member(const LabeledSubject& s, const std::string& cls,
                          const std::vector<std::string>& base_classes);

struct AugmentRanges {
  double rotation_deg = 10.0;
  double translation_fraction = 0.05;
  double scale_min = 0.9;
  double scale_max = 1.1;

  static AugmentRanges none() { return {0.0, 0.0, 1.0, 1.0}; }
};

/// Draws a random rotation/translation/isotropic scale (physical space) and
/// returns it in normalized coordinates of `shape`.
AffineTransform sample_augmentation(const AugmentRanges& ranges, const GridShape& shape,
                                    const Spacing& spacing, Rng& rng);

/// Applies one sampled affine to the image (trilinear) and all masks (nearest).
/// Returns the transform that was applied.
AffineTransform augment(EpisodeMember& member, const AugmentRanges& ranges, Rng& rng);

}  // namespace proto3d

namespace proto3d {

struct Augmented {
  Volume image;
  std::vector<MaskVolume> masks;
  AffineTransform transform;
};

Augmented augment(const Volume& image, const std::vector<MaskVolume>& masks,
                  const AugmentRanges& ranges, Rng& rng);

}  // namespace proto3d
