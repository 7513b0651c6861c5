#include "scenebias/repeatability.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>

#include "scenebias/errors.hpp"
#include "scenebias/matching.hpp"
#include "scenebias/strutil.hpp"

namespace scenebias {

RepeatabilityResult repeatability(const std::vector<InterestRegion>& ref,
                                  const std::vector<InterestRegion>& test, const Homography& h,
                                  const FrameBounds& frame, double eps_overlap,
                                  double normalize_radius) {
  if (h.determinant() == 0.0 || !std::isfinite(h.determinant()))
    throw ArgumentError("geometric relation must be invertible");

  std::vector<InterestRegion> common_ref;
  for (const InterestRegion& r : ref)
    if (frame.contains(h.apply({r.x, r.y}))) common_ref.push_back(r);

  std::vector<InterestRegion> common_test;
  for (const InterestRegion& r : test)
    if (frame.contains({r.x, r.y})) common_test.push_back(r);

  if (common_ref.empty())
    throw UndefinedRepeatabilityError("repeatability undefined: no reference regions in the common part");

  RepeatabilityResult result;
  result.n_ref = static_cast<int>(common_ref.size());
  result.n_rep = static_cast<int>(
      correspondences(common_ref, common_test, h, eps_overlap, normalize_radius).size());
  result.ratio = static_cast<double>(result.n_rep) / result.n_ref;
  return result;
}

void sort_records(std::vector<RepeatabilityRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const RepeatabilityRecord& p, const RepeatabilityRecord& q) {
              return std::tie(p.detector, p.kind, p.scene, p.step) <
                     std::tie(q.detector, q.kind, q.scene, q.step);
            });
}

std::string records_to_csv(const std::vector<RepeatabilityRecord>& records) {
  std::string out = "detector,kind,scene,step,param,n_ref,n_rep,ratio\n";
  for (const RepeatabilityRecord& r : records) {
    out += r.detector + "," + to_string(r.kind) + "," + std::to_string(r.scene) + "," +
           std::to_string(r.step) + "," + format_fixed(r.param, 2) + "," +
           std::to_string(r.n_ref) + "," + std::to_string(r.n_rep) + "," +
           format_fixed(r.ratio, 6) + "\n";
  }
  return out;
}

std::vector<RepeatabilityRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != "detector,kind,scene,step,param,n_ref,n_rep,ratio")
    throw FormatError("repeatability CSV: missing or wrong header");

  std::vector<RepeatabilityRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> f = split(trim(line), ',');
    if (f.size() != 8)
      throw FormatError("repeatability CSV: line " + std::to_string(line_no) +
                        ": expected 8 fields");
    try {
      RepeatabilityRecord r;
      r.detector = f[0];
      r.kind = transform_kind_from_string(f[1]);
      r.scene = std::stoi(f[2]);
      r.step = std::stoi(f[3]);
      r.param = std::stod(f[4]);
      r.n_ref = std::stoi(f[5]);
      r.n_rep = std::stoi(f[6]);
      r.ratio = std::stod(f[7]);
      records.push_back(std::move(r));
    } catch (const std::exception&) {
      throw FormatError("repeatability CSV: line " + std::to_string(line_no) + ": bad value");
    }
  }
  return records;
}

void save_records(const std::vector<RepeatabilityRecord>& records,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << records_to_csv(records);
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<RepeatabilityRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return records_from_csv(text);
}

}  // namespace scenebias
