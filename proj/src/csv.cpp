#include "eur/csv.hpp"

#include "eur/errors.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace eur {

std::string_view library_version() { return "0.1.0"; }

std::uint64_t config_hash(std::string_view canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, const Provenance& prov, std::vector<std::string> columns)
    : out_(out), width_(columns.size()) {
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << config_hash(prov.config);
  out_ << "# eur " << library_version() << " command=" << prov.command << " seed=" << prov.seed
       << " config_hash=" << hex.str() << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != width_) throw InternalError("CSV row width differs from header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>)
            out_ << format_double(v);
          else if constexpr (std::is_same_v<T, bool>)
            out_ << (v ? 1 : 0);
          else
            out_ << v;
        },
        cells[i]);
  }
  out_ << '\n';
}

}  // namespace eur
