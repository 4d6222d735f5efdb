#include "sqrtx/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace sqrtx {

std::string JsonWriter::format_double(double value) {
  if (!std::isfinite(value)) {
    // JSON has no literals for these; they do not occur in well-formed
    // reports, but a crash on a diagnostic path helps nobody.
    return "null";
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void JsonWriter::begin_field(const std::string& key) {
  body_ += body_.empty() ? "\"" : ", \"";
  body_ += key;
  body_ += "\": ";
}

JsonWriter& JsonWriter::field(const std::string& key, double value) {
  begin_field(key);
  body_ += format_double(value);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, std::int64_t value) {
  begin_field(key);
  body_ += std::to_string(value);
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool value) {
  begin_field(key);
  body_ += value ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::field(const std::string& key,
                              const std::string& value) {
  begin_field(key);
  body_ += "\"";
  body_ += value;  // values used here are fixed enum names, never arbitrary
  body_ += "\"";
  return *this;
}

std::string JsonWriter::str() const { return "{" + body_ + "}"; }

}  // namespace sqrtx
