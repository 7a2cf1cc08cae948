#include "cechkit/io.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

namespace cechkit {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_field(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, "malformed number '" + std::string(field) + "'");
  if (!std::isfinite(value)) throw ParseError(line, "non-finite value");
  return value;
}

Disk make_disk(const std::vector<double>& row, std::size_t dimension, std::size_t line) {
  if (row.size() != dimension + 1)
    throw ParseError(line, "expected " + std::to_string(dimension + 1) + " fields, got " +
                               std::to_string(row.size()));
  if (!(row.back() > 0.0)) throw ParseError(line, "non-positive radius");
  Vector center(static_cast<Eigen::Index>(dimension));
  for (std::size_t i = 0; i < dimension; ++i) center[static_cast<Eigen::Index>(i)] = row[i];
  return Disk(std::move(center), row.back());
}

DiskSystem parse_csv(std::string_view text) {
  std::vector<Disk> disks;
  std::size_t dimension = 0;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    std::string_view line = trim(text.substr(0, newline));
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_number;
    if (line.empty() || line.front() == '#') continue;

    std::vector<double> row;
    while (true) {
      const auto comma = line.find(',');
      row.push_back(parse_field(line.substr(0, comma), line_number));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (disks.empty()) {
      if (row.size() < 2) throw ParseError(line_number, "a disk needs at least one coordinate and a radius");
      dimension = row.size() - 1;
    }
    disks.push_back(make_disk(row, dimension, line_number));
  }
  if (disks.empty()) throw ParseError(0, "no disks in input");
  return DiskSystem(std::move(disks));
}

DiskSystem parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  if (!doc.is_object() || !doc.contains("disks") || !doc["disks"].is_array())
    throw ParseError(0, "expected an object with a \"disks\" array");

  const auto& rows = doc["disks"];
  if (rows.empty()) throw ParseError(0, "no disks in input");
  std::size_t dimension = 0;
  if (doc.contains("dimension")) {
    if (!doc["dimension"].is_number_unsigned() || doc["dimension"].get<std::size_t>() == 0)
      throw ParseError(0, "\"dimension\" must be a positive integer");
    dimension = doc["dimension"].get<std::size_t>();
  } else if (rows.front().is_array() && !rows.front().empty()) {
    dimension = rows.front().size() - 1;
  }

  std::vector<Disk> disks;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array()) throw ParseError(i + 1, "disk row must be an array");
    std::vector<double> values;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError(i + 1, "disk row must contain numbers");
      values.push_back(v.get<double>());
    }
    disks.push_back(make_disk(values, dimension, i + 1));
  }
  return DiskSystem(std::move(disks));
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

DiskSystem parse_disk_system(std::string_view text, Format format) {
  return format == Format::csv ? parse_csv(text) : parse_json(text);
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

std::string format_disk_system(const DiskSystem& system, Format format) {
  if (format == Format::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& disk : system) {
      nlohmann::json row = nlohmann::json::array();
      for (auto x : disk.center()) row.push_back(x);
      row.push_back(disk.radius());
      rows.push_back(std::move(row));
    }
    nlohmann::json doc{{"schema", "cech-kit/1"}, {"dimension", system.dimension()}, {"disks", rows}};
    return doc.dump(2) + "\n";
  }

  std::string out;
  for (const auto& disk : system) {
    for (auto x : disk.center()) out += format_number(x) + ",";
    out += format_number(disk.radius()) + "\n";
  }
  return out;
}

}  // namespace cechkit
