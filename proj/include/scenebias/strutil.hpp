#pragma once

#include <string>
#include <vector>

namespace scenebias {

/// Fixed-point decimal formatting ("%.*f"), locale-independent.
std::string format_fixed(double v, int decimals);

/// Shortest formatting that still distinguishes values ("%.*g").
std::string format_general(double v, int significant = 10);

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

}  // namespace scenebias
