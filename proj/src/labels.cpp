#include "scenebias/labels.hpp"

#include <fstream>
#include <sstream>

#include "scenebias/errors.hpp"
#include "scenebias/strutil.hpp"

namespace scenebias {

LabelMap parse_labels_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  LabelMap labels;
  int line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    if (first && row == "scene_id,f,g,h") {
      first = false;
      continue;
    }
    first = false;

    const std::vector<std::string> f = split(row, ',');
    if (f.size() != 4)
      throw ValidationError(origin + ": line " + std::to_string(line_no) +
                            ": expected 'scene_id,f,g,h'");
    int values[4];
    for (int i = 0; i < 4; ++i) {
      std::size_t pos = 0;
      try {
        values[i] = std::stoi(trim(f[i]), &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != trim(f[i]).size() || trim(f[i]).empty())
        throw ValidationError(origin + ": line " + std::to_string(line_no) +
                              ": field " + std::to_string(i + 1) + " is not an integer");
    }
    for (int i = 1; i < 4; ++i)
      if (values[i] != 0 && values[i] != 1)
        throw ValidationError(origin + ": line " + std::to_string(line_no) +
                              ": labels must be 0 or 1");
    if (labels.count(values[0]))
      throw ValidationError(origin + ": line " + std::to_string(line_no) + ": duplicate scene " +
                            std::to_string(values[0]));
    labels[values[0]] = {values[1], values[2], values[3]};
  }
  return labels;
}

LabelMap parse_labels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_labels_text(text, path.string());
}

std::string labels_to_csv(const LabelMap& labels) {
  std::string out = "scene_id,f,g,h\n";
  for (const auto& [id, l] : labels)
    out += std::to_string(id) + "," + std::to_string(l.f) + "," + std::to_string(l.g) + "," +
           std::to_string(l.h) + "\n";
  return out;
}

}  // namespace scenebias
