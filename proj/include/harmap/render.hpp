#pragma once

#include <span>
#include <string>

#include "harmap/harmonic.hpp"

namespace harmap {

/// SVG 1.1 document with one closed path per radius (M + 1 points, absolute
/// M/L/Z commands), axes through the origin and a label per curve. The view
/// box is the bounding box of all curves padded by 5%. Numbers are printed
/// with 9 significant digits, so equal inputs give equal bytes.
///
/// Radii must lie in (0, 1) (DomainError); M >= 256 (ArgumentError).
std::string render_svg(const HarmonicMap& f, std::span<const double> radii, std::size_t M = 512);

/// Writes render_svg(...) to out_path; IoError when the file cannot be written.
void render_image(const HarmonicMap& f, std::span<const double> radii, std::size_t M,
                  const std::string& out_path);

} // namespace harmap
