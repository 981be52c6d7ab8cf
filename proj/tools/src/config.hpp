#pragma once

// Plain-text configuration files: one `key = value` per line, `#` starts a
// comment, blank lines ignored.  Command-line flags always take precedence
// over file values; files only fill in what the command line left unset.
// Every diagnostic names the offending key and line number.

#include <optional>
#include <string>
#include <vector>

namespace bcsreps::cli {

struct ConfigEntry {
  std::string key;
  std::string value;  // raw text, trimmed
  int line = 0;       // 1-based
};

struct ConfigFile {
  std::string path;
  std::vector<ConfigEntry> entries;
};

// Parse a file; throws DomainError on unreadable files, malformed lines, or
// duplicate keys.
ConfigFile parse_config_file(const std::string& path);

// Typed value parsers; each throws DomainError naming the key and line.
double entry_as_double(const ConfigFile& file, const ConfigEntry& entry);
long entry_as_int(const ConfigFile& file, const ConfigEntry& entry);
bool entry_as_bool(const ConfigFile& file, const ConfigEntry& entry);

}  // namespace bcsreps::cli
