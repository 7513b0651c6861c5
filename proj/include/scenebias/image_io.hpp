#pragma once

#include <filesystem>

#include "scenebias/image.hpp"

namespace scenebias {

/// Decodes a PGM (P5, maxval 255) or PNG (8-bit gray or RGB) file.
/// Color inputs are converted to luminance with BT.601 weights.
GrayImage load_image(const std::filesystem::path& path);

/// Encodes by extension: ".pgm" (binary, maxval 255) or ".png" (8-bit gray).
/// Both round-trip exactly through load_image.
void save_image(const GrayImage& img, const std::filesystem::path& path);

}  // namespace scenebias
