#pragma once

#include <cstdint>
#include <string>

namespace sqrtx {

// Minimal JSON object writer with caller-controlled key order and numbers
// rendered at 17 significant digits, so identical inputs serialise to
// byte-identical text. Output formats elsewhere in the project depend on
// that determinism; a general-purpose serialiser with its own float
// formatting would not guarantee it.
class JsonWriter {
 public:
  JsonWriter& field(const std::string& key, double value);
  JsonWriter& field(const std::string& key, std::int64_t value);
  JsonWriter& field(const std::string& key, bool value);
  JsonWriter& field(const std::string& key, const std::string& value);

  std::string str() const;

  // Standalone formatting helper shared with the matrix writer.
  static std::string format_double(double value);

 private:
  void begin_field(const std::string& key);
  std::string body_;
};

}  // namespace sqrtx
