#include "config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <unordered_map>

#include "bcsreps/errors.hpp"

namespace bcsreps::cli {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail_at(const ConfigFile& file, int line,
                          const std::string& what) {
  throw DomainError(file.path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

ConfigFile parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open config file: " + path);
  }
  ConfigFile file;
  file.path = path;
  std::unordered_map<std::string, int> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail_at(file, line_no, "expected 'key = value', got '" + trim(raw) + "'");
    }
    ConfigEntry entry;
    entry.key = trim(line.substr(0, eq));
    entry.value = trim(line.substr(eq + 1));
    entry.line = line_no;
    if (entry.key.empty()) {
      fail_at(file, line_no, "missing key before '='");
    }
    if (entry.value.empty()) {
      fail_at(file, line_no, "missing value for key '" + entry.key + "'");
    }
    if (auto [it, inserted] = seen.emplace(entry.key, line_no); !inserted) {
      fail_at(file, line_no,
              "duplicate key '" + entry.key + "' (first set on line " +
                  std::to_string(it->second) + ")");
    }
    file.entries.push_back(std::move(entry));
  }
  return file;
}

double entry_as_double(const ConfigFile& file, const ConfigEntry& entry) {
  double value = 0.0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    fail_at(file, entry.line,
            "value for '" + entry.key + "' is not a number: '" + entry.value +
                "'");
  }
  return value;
}

long entry_as_int(const ConfigFile& file, const ConfigEntry& entry) {
  long value = 0;
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    fail_at(file, entry.line,
            "value for '" + entry.key + "' is not an integer: '" +
                entry.value + "'");
  }
  return value;
}

bool entry_as_bool(const ConfigFile& file, const ConfigEntry& entry) {
  const std::string& v = entry.value;
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  fail_at(file, entry.line,
          "value for '" + entry.key + "' is not a boolean (true/false/1/0): '" +
              v + "'");
}

}  // namespace bcsreps::cli
