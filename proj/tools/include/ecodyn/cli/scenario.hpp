#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecodyn::cli {

/// One command invocation after merging the scenario file and the flags.
struct Invocation {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  ///< in first-seen order
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::filesystem::path base_dir;  ///< scenario directory
  std::vector<std::string> from_scenario;  ///< keys whose value came from the file
  bool help = false;
  bool version = false;

  /// Inserts or overwrites.
  void set(const std::string& key, std::string value);

  /// Relative paths given in a scenario file resolve against its directory;
  /// paths given as flags resolve against the working directory.
  std::filesystem::path resolve(const std::string& key, const std::string& value) const;
};

/// `key = value` lines; `#` starts a comment; blank lines ignored. Keys may
/// use '-' or '_'. Values may be double-quoted.
std::vector<std::pair<std::string, std::string>> parse_scenario(const std::string& text);

/// Flags `--key value` (or `--key=value`) after an optional command word.
/// `--scenario FILE` loads a file first; explicit flags override it.
Invocation parse_invocation(const std::vector<std::string>& args);

/// '-' to '_'.
std::string normalize_key(std::string key);

}  // namespace ecodyn::cli
