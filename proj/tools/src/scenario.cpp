#include "ecodyn/cli/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ecodyn/error.hpp"

namespace ecodyn::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Strips a trailing comment that is not inside double quotes.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string unquote(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

}  // namespace

void Invocation::set(const std::string& key, std::string value) {
  for (auto& [k, v] : params) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  params.emplace_back(key, std::move(value));
}

std::filesystem::path Invocation::resolve(const std::string& key, const std::string& value) const {
  const std::filesystem::path p(value);
  const bool file = std::find(from_scenario.begin(), from_scenario.end(), key) != from_scenario.end();
  if (p.is_absolute() || !file) return p;
  return base_dir / p;
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::vector<std::pair<std::string, std::string>> parse_scenario(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("scenario line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = normalize_key(trim(body.substr(0, eq)));
    if (key.empty()) throw ValidationError("scenario line " + std::to_string(lineno) + ": empty key");
    for (const auto& [k, v] : out) {
      if (k == key) throw ValidationError("key '" + key + "' appears twice in the scenario");
    }
    out.emplace_back(key, unquote(trim(body.substr(eq + 1))));
  }
  return out;
}

Invocation parse_invocation(const std::vector<std::string>& args) {
  Invocation inv;
  std::vector<std::pair<std::string, std::string>> flags;
  std::optional<std::string> scenario_path;

  std::size_t i = 0;
  if (i < args.size() && args[i].rfind("-", 0) != 0) inv.command = args[i++];
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-h" || a == "--help") {
      inv.help = true;
      continue;
    }
    if (a == "--version") {
      inv.version = true;
      continue;
    }
    if (a.rfind("--", 0) != 0 || a.size() == 2) throw ValidationError("unexpected argument '" + a + "'");
    std::string key = a.substr(2), value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= args.size()) throw ValidationError("flag --" + key + " needs a value");
      value = args[++i];
    }
    key = normalize_key(key);
    if (key == "scenario") {
      scenario_path = value;
    } else {
      flags.emplace_back(key, value);
    }
  }

  if (scenario_path) {
    std::ifstream f(*scenario_path, std::ios::binary);
    if (!f) throw ValidationError("key 'scenario': cannot read " + *scenario_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    inv.base_dir = std::filesystem::path(*scenario_path).parent_path();
    for (auto& [k, v] : parse_scenario(ss.str())) {
      if (k == "command") {
        if (!inv.command.empty() && inv.command != v) {
          throw ValidationError("key 'command': scenario says '" + v + "' but the command line says '" +
                                inv.command + "'");
        }
        inv.command = v;
      } else if (k == "out") {
        inv.out = (inv.base_dir / v).string();
      } else if (k == "format") {
        inv.format = v;
      } else {
        inv.set(k, v);
        inv.from_scenario.push_back(k);
      }
    }
  }
  for (auto& [k, v] : flags) {
    if (k == "out") inv.out = v;
    else if (k == "format") inv.format = v;
    else if (k == "command") throw ValidationError("key 'command' belongs in a scenario file, not a flag");
    else {
      inv.set(k, v);
      std::erase(inv.from_scenario, k);
    }
  }
  return inv;
}

}  // namespace ecodyn::cli
