#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace leosim::csv {

// Shortest decimal text that parses back to the same double.
std::string num(double v);
// Fixed number of significant digits, for human-facing tables.
std::string num(double v, int significant);

double to_double(std::string_view s);
std::int64_t to_int(std::string_view s);

class Writer {
 public:
  Writer(const std::string& path, const std::vector<std::string>& header);
  ~Writer() {
    if (out_.is_open()) close();
  }
  Writer& operator<<(std::string_view field);
  Writer& operator<<(const char* field) { return *this << std::string_view(field); }
  Writer& operator<<(const std::string& field) { return *this << std::string_view(field); }
  Writer& operator<<(std::int64_t v);
  Writer& operator<<(int v) { return *this << static_cast<std::int64_t>(v); }
  Writer& operator<<(double v);
  void end_row();
  void close();

 private:
  void sep();
  std::ofstream out_;
  std::string buf_;
  bool first_ = true;
};

// Streaming reader; fields view into an internal line buffer and are valid
// until the next call to next().
class Reader {
 public:
  explicit Reader(const std::string& path);
  const std::vector<std::string>& header() const { return header_; }
  // Column index by name; throws std::runtime_error if absent.
  std::size_t column(std::string_view name) const;
  bool next(std::vector<std::string_view>& fields);

 private:
  std::ifstream in_;
  std::string line_;
  std::vector<std::string> header_;
  std::string path_;
};

}  // namespace leosim::csv
