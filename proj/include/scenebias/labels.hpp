#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace scenebias {

/// Human-assigned binary scene attributes: f = outdoor, g = human-made,
/// h = simple. Labels are consumed as data, never inferred.
struct SceneLabels {
  int f = 0;
  int g = 0;
  int h = 0;

  friend bool operator==(const SceneLabels&, const SceneLabels&) = default;
};

using LabelMap = std::map<int, SceneLabels>;

/// CSV rows "scene_id,f,g,h" with binary fields; an optional header line is
/// skipped. Duplicate ids and non-binary values are validation errors naming
/// the row.
LabelMap parse_labels_text(const std::string& text, const std::string& origin);
LabelMap parse_labels(const std::filesystem::path& path);

std::string labels_to_csv(const LabelMap& labels);

}  // namespace scenebias
