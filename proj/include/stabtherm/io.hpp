#pragma once

#include <string>
#include <vector>

namespace stabtherm {

inline constexpr const char* kToolVersion = "0.1.0";

// Locale-independent decimal with 15 significant digits.
std::string fmt_double(double v);

// Comment header carried by every output file. The timestamp line is the
// only part excluded from the byte-identity guarantee of repeated runs.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::string render() const;
};

std::string csv_row(const std::vector<double>& values);

}  // namespace stabtherm
