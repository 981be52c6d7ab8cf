#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "bcsreps/errors.hpp"

namespace bcsreps::cli {

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // collapse the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_csv(const CurveFile& curve) {
  if (curve.header.empty()) {
    throw DomainError("csv: header must name at least one column");
  }
  std::string out;
  for (std::size_t c = 0; c < curve.header.size(); ++c) {
    if (c > 0) out += ',';
    out += curve.header[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < curve.rows.size(); ++r) {
    const auto& row = curve.rows[r];
    if (row.size() != curve.header.size()) {
      throw DomainError("csv: row " + std::to_string(r) + " has " +
                        std::to_string(row.size()) + " cells, expected " +
                        std::to_string(curve.header.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        throw NumericError("csv: non-finite value in column '" +
                           curve.header[c] + "', row " + std::to_string(r));
      }
      if (c > 0) out += ',';
      out += format_value(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<std::pair<std::string, double>>& rows) {
  std::string out = "name,value\n";
  for (const auto& [name, value] : rows) {
    if (!std::isfinite(value)) {
      throw NumericError("csv: non-finite value for '" + name + "'");
    }
    out += name;
    out += ',';
    out += format_value(value);
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw DomainError("cannot open output file: " + path);
  }
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) {
    throw DomainError("failed writing output file: " + path);
  }
}

}  // namespace bcsreps::cli
