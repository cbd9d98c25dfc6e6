#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eur {

std::string_view library_version();

// FNV-1a, 64 bit, of a canonical config string.
std::uint64_t config_hash(std::string_view canonical);

// Shortest round-trip-safe rendering used in every CSV and JSON output.
std::string format_double(double x);

struct Provenance {
  std::string command;
  std::uint64_t seed = 0;
  std::string config;  // canonical "key=value;..." string, hashed into the header
};

// Writes "# eur <version> command=<cmd> seed=<seed> config_hash=<hex>", then the
// header row, then rows. Booleans are written as 0/1.
class CsvWriter {
 public:
  using Cell = std::variant<double, long long, bool, std::string>;

  CsvWriter(std::ostream& out, const Provenance& prov, std::vector<std::string> columns);
  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace eur
