#include "casimir/units.hpp"

#include <cstdio>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <utility>

namespace casimir::units {

namespace {

struct Suffix {
  const char* text;
  double factor;
};

double parse_with_suffixes(std::string_view text, const std::string& flag,
                           std::span<const Suffix> suffixes,
                           const char* kind) {
  for (const Suffix& s : suffixes) {
    const std::string_view sv(s.text);
    if (text.size() > sv.size() && text.ends_with(sv)) {
      const std::string number(text.substr(0, text.size() - sv.size()));
      char* end = nullptr;
      const double v = std::strtod(number.c_str(), &end);
      if (end == number.c_str() || *end != '\0') break;
      return v * s.factor;
    }
  }
  throw std::invalid_argument(flag + ": cannot parse '" + std::string(text) +
                              "' as a " + kind +
                              " (a unit suffix is required)");
}

// longer suffixes first so "mm" wins over "m"
constexpr Suffix kLength[] = {
    {"nm", 1e-9}, {"um", 1e-6}, {"mm", 1e-3}, {"m", 1.0}};
constexpr Suffix kArea[] = {
    {"nm2", 1e-18}, {"um2", 1e-12}, {"mm2", 1e-6}, {"m2", 1.0}};
constexpr Suffix kVoltage[] = {
    {"nV", 1e-9}, {"uV", 1e-6}, {"mV", 1e-3}, {"V", 1.0}};

}  // namespace

double parse_length(std::string_view text, const std::string& flag) {
  return parse_with_suffixes(text, flag, kLength, "length");
}

double parse_area(std::string_view text, const std::string& flag) {
  return parse_with_suffixes(text, flag, kArea, "area");
}

double parse_voltage(std::string_view text, const std::string& flag) {
  return parse_with_suffixes(text, flag, kVoltage, "voltage");
}

std::string format_si(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9e", value);
  return buf;
}

}  // namespace casimir::units
