#pragma once

// Disk-system file formats.
//
// CSV: one disk per line, `c_1,...,c_d,r`; the dimension comes from the
// first row. Blank lines and lines starting with '#' are ignored.
// JSON: {"dimension": d, "disks": [[c_1, ..., c_d, r], ...]}.

#include <cstddef>
#include <string>
#include <string_view>

#include "cechkit/types.hpp"

namespace cechkit {

enum class Format { csv, json };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

DiskSystem parse_disk_system(std::string_view text, Format format);

/// Serializes with shortest round-trip number formatting.
std::string format_disk_system(const DiskSystem& system, Format format);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace cechkit
