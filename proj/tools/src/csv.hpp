#pragma once

// Deterministic CSV emission: comma-separated, LF line endings, header row,
// floating values with 12 significant digits.  Shared by every subcommand so
// golden-file tests cover one code path.

#include <string>
#include <utility>
#include <vector>

namespace bcsreps::cli {

struct CurveFile {
  std::vector<std::string> header;        // column names
  std::vector<std::vector<double>> rows;  // each row matches header size
};

// One double with 12 significant digits, shortest form ("%.12g").
std::string format_value(double v);

// Serialize a numeric curve; throws DomainError on ragged rows or an empty
// header, NumericError on NaN/Inf cells.
std::string to_csv(const CurveFile& curve);

// name,value table (the tc/phase/nu-count shape).
std::string to_csv(const std::vector<std::pair<std::string, double>>& rows);

// Write bytes to path exactly as given; throws DomainError when the file
// cannot be opened.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace bcsreps::cli
