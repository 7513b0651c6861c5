#include "scenebias/regions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "scenebias/errors.hpp"
#include "scenebias/strutil.hpp"

namespace scenebias {

InterestRegion InterestRegion::circle(double x, double y, double r, double strength) {
  const double inv = 1.0 / (r * r);
  return {x, y, inv, 0.0, inv, strength};
}

double InterestRegion::max_radius() const {
  // Smallest eigenvalue of [[a, b], [b, c]] gives the largest semi-axis.
  const double mean = 0.5 * (a + c);
  const double dev = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  const double lambda_min = mean - dev;
  return 1.0 / std::sqrt(lambda_min);
}

void sort_regions(std::vector<InterestRegion>& regions) {
  std::sort(regions.begin(), regions.end(), [](const InterestRegion& p, const InterestRegion& q) {
    if (p.strength != q.strength) return p.strength > q.strength;
    if (p.y != q.y) return p.y < q.y;
    return p.x < q.x;
  });
}

std::string DetectorId::name() const {
  switch (kind) {
    case Kind::HarrisLaplace: return "HARLAP";
    case Kind::HessianLaplace: return "HESLAP";
    case Kind::Mser: return "MSER";
    case Kind::FastHessian: return "FASTHESS";
    case Kind::External: return "EXT:" + tag;
  }
  return "?";
}

DetectorId DetectorId::parse(const std::string& name) {
  if (name == "HARLAP") return {Kind::HarrisLaplace, ""};
  if (name == "HESLAP") return {Kind::HessianLaplace, ""};
  if (name == "MSER") return {Kind::Mser, ""};
  if (name == "FASTHESS") return {Kind::FastHessian, ""};
  if (name.rfind("EXT:", 0) == 0 && name.size() > 4) return {Kind::External, name.substr(4)};
  throw ConfigError("unknown detector '" + name +
                    "' (expected HARLAP, HESLAP, MSER, FASTHESS or EXT:<tag>)");
}

namespace {

std::vector<double> parse_numbers(const std::string& line) {
  std::istringstream in(line);
  std::vector<double> values;
  double v;
  while (in >> v) values.push_back(v);
  std::string leftover;
  if (in.clear(), in >> leftover) return {};  // non-numeric garbage
  return values;
}

}  // namespace

std::vector<InterestRegion> parse_region_text(const std::string& text,
                                              const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(line).empty()) return true;
    }
    if (required)
      throw FormatError(origin + ": unexpected end of file at line " + std::to_string(line_no + 1));
    return false;
  };

  next_line(true);
  const std::vector<double> header = parse_numbers(line);
  if (header.size() != 1 || header[0] != 1.0)
    throw FormatError(origin + ": line " + std::to_string(line_no) +
                      ": expected scale marker '1.0'");

  next_line(true);
  const std::vector<double> count_row = parse_numbers(line);
  if (count_row.size() != 1 || count_row[0] < 0 ||
      count_row[0] != std::floor(count_row[0]))
    throw FormatError(origin + ": line " + std::to_string(line_no) +
                      ": expected a non-negative region count");
  const long count = static_cast<long>(count_row[0]);

  std::vector<InterestRegion> regions;
  regions.reserve(count);
  for (long row = 1; row <= count; ++row) {
    next_line(true);
    const std::vector<double> v = parse_numbers(line);
    if (v.size() != 5)
      throw FormatError(origin + ": line " + std::to_string(line_no) +
                        ": expected 'x y a b c' (5 numbers)");
    InterestRegion r{v[0], v[1], v[2], v[3], v[4], 0.0};
    if (!r.positive_definite())
      throw ValidationError(origin + ": row " + std::to_string(row) + " (line " +
                            std::to_string(line_no) + "): ellipse is not positive definite");
    regions.push_back(r);
  }
  if (next_line(false))
    throw FormatError(origin + ": line " + std::to_string(line_no) +
                      ": trailing data after " + std::to_string(count) + " regions");
  return regions;
}

std::string format_region_text(const std::vector<InterestRegion>& regions) {
  std::string out = "1.0\n" + std::to_string(regions.size()) + "\n";
  for (const InterestRegion& r : regions) {
    out += format_general(r.x) + " " + format_general(r.y) + " " + format_general(r.a) + " " +
           format_general(r.b) + " " + format_general(r.c) + "\n";
  }
  return out;
}

std::vector<InterestRegion> read_region_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_region_text(text, path.string());
}

void write_region_file(const std::vector<InterestRegion>& regions,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_region_text(regions);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace scenebias
