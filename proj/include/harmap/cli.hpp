#pragma once

#include <iosfwd>
#include <string>

#include "harmap/harmonic.hpp"

namespace harmap {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1; // not a member, or a suite failed
inline constexpr int kExitUsage = 2;    // bad arguments or malformed input

/// Parses {"order": N, "h": [[re, im], ...], "g": [[re, im], ...]} with arrays
/// indexed from n = 1; g may be omitted. `order` must match the array lengths
/// it bounds: shorter arrays are padded with zeros. Throws ArgumentError with
/// a line or field diagnostic.
HarmonicMap parse_map_json(const std::string& text);
/// Same document, numbers printed with 12 significant digits.
std::string map_to_json(const HarmonicMap& f);

/// A catalog tag, "log_map", or a path to a JSON map file. Order 0 keeps the
/// file's own order and gives named maps the default order.
HarmonicMap load_map(const std::string& source, std::size_t order);

/// Runs one subcommand and returns its exit code.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace harmap
