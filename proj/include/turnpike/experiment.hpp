#pragma once

#include <iosfwd>
#include <map>

#include "turnpike/csv.hpp"

namespace turnpike {

/// One key = value entry of a flat config file, with its source line.
struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ParsedConfig {
  std::vector<ConfigEntry> entries;
  std::string source_path;

  const ConfigEntry* find(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback = "") const;
  bool has(const std::string& key) const;
};

/// Parses the flat dotted-key grammar (see README). Parse failures become
/// diagnostics, not exceptions.
struct Diagnostic {
  std::string key;
  int line = 0;
  std::string message;
};

ParsedConfig parse_config_text(const std::string& text, const std::string& source_path = "<string>");
ParsedConfig parse_config_file(const std::string& path);

/// Empty list iff the config is runnable.
std::vector<Diagnostic> validate(const ParsedConfig& config);

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 runtime failure, 2 validation failure
  std::vector<std::string> files_written;
  std::string manifest_path;
};

/// Executes the configured task, writing all artifacts plus manifest.json
/// (path + sha256 + bytes per file; the timestamp lives only in the
/// manifest). `jobs` bounds sweep-level concurrency.
RunResult run_experiment(const ParsedConfig& config, const std::string& out_dir, int jobs,
                         std::ostream& log);

std::string sha256_file(const std::string& path);

}  // namespace turnpike
