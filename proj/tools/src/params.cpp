#include "ecodyn/cli/params.hpp"

#include <charconv>
#include <cmath>

#include "ecodyn/error.hpp"

namespace ecodyn::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

double parse_number(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* first = t.data();
  if (!t.empty() && t.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ValidationError("key '" + key + "': expected a finite number, got '" + text + "'");
  }
  return v;
}

std::vector<double> parse_numbers(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_number(key, text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Params::Params(const CommandSpec& spec, const Invocation& inv) : spec_(&spec), inv_(&inv) {
  for (const auto& [k, v] : inv.params) {
    bool known = false;
    for (const auto& ks : spec.keys) known = known || ks.name == k;
    if (!known) {
      std::string list;
      for (const auto& ks : spec.keys) list += (list.empty() ? "" : ", ") + ks.name;
      throw ValidationError("unknown key '" + k + "' for command " + spec.name + " (accepted: " + list + ")");
    }
    values_[k] = v;
  }
  for (const auto& ks : spec.keys) {
    if (values_.count(ks.name)) continue;
    if (ks.default_value) values_[ks.name] = *ks.default_value;
    else if (ks.required) throw ValidationError("key '" + ks.name + "' is required for command " + spec.name);
  }
}

bool Params::has(const std::string& key) const { return values_.count(key) > 0; }

const std::string& Params::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ValidationError("key '" + key + "' is required for command " + spec_->name);
  return it->second;
}

std::string Params::text(const std::string& key) const { return raw(key); }

double Params::number(const std::string& key) const { return parse_number(key, raw(key)); }

std::size_t Params::count(const std::string& key) const {
  const std::string& t = raw(key);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || v == 0) {
    throw ValidationError("key '" + key + "': expected a positive integer, got '" + t + "'");
  }
  return v;
}

std::vector<double> Params::numbers(const std::string& key) const { return parse_numbers(key, raw(key)); }

std::filesystem::path Params::path(const std::string& key) const { return inv_->resolve(key, raw(key)); }

std::vector<std::pair<std::string, std::string>> Params::resolved() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& ks : spec_->keys) {
    if (const auto it = values_.find(ks.name); it != values_.end()) out.emplace_back(ks.name, it->second);
  }
  return out;
}

}  // namespace ecodyn::cli
