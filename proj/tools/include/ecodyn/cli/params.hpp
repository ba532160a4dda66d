#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecodyn/cli/scenario.hpp"
#include "ecodyn/io.hpp"

namespace ecodyn::cli {

struct KeySpec {
  std::string name;
  std::optional<std::string> default_value;  ///< empty: required or optional-without-default
  std::string help;
  bool required = false;
};

class Params;

struct CommandSpec {
  std::string name;
  std::string summary;
  std::vector<KeySpec> keys;
  std::function<io::Report(const Params&)> run;
};

/// Typed, validated view of an invocation's parameters against a command's key list.
class Params {
 public:
  /// Throws ValidationError for unknown keys and missing required keys.
  Params(const CommandSpec& spec, const Invocation& inv);

  bool has(const std::string& key) const;
  std::string text(const std::string& key) const;
  double number(const std::string& key) const;
  std::size_t count(const std::string& key) const;   ///< positive integer
  std::vector<double> numbers(const std::string& key) const;  ///< comma-separated
  std::filesystem::path path(const std::string& key) const;

  /// Every key that has a value, in the command's declared order.
  std::vector<std::pair<std::string, std::string>> resolved() const;

 private:
  const std::string& raw(const std::string& key) const;

  const CommandSpec* spec_;
  const Invocation* inv_;
  std::map<std::string, std::string> values_;
};

double parse_number(const std::string& key, const std::string& text);
std::vector<double> parse_numbers(const std::string& key, const std::string& text);

}  // namespace ecodyn::cli
