#include "stabtherm/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>

namespace stabtherm {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

std::string RunManifest::render() const {
  std::ostringstream os;
  os << "# stabtherm " << command << "\n";
  os << "# version: " << kToolVersion << "\n";
  for (const auto& [key, value] : params) os << "# " << key << ": " << value << "\n";
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char ts[32];
  std::strftime(ts, sizeof(ts), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  os << "# timestamp: " << ts << "\n";
  return os.str();
}

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ',';
    row += fmt_double(values[i]);
  }
  row += '\n';
  return row;
}

}  // namespace stabtherm
