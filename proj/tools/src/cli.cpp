#include "ecodyn/cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>

#include "ecodyn/cli/commands.hpp"
#include "ecodyn/version.hpp"

namespace ecodyn::cli {

namespace {

void print_usage(std::ostream& os, const std::vector<CommandSpec>& table) {
  os << "usage: ecodyn <command> [--key value ...] [--scenario FILE] [--out PATH] [--format csv|json]\n\n"
        "commands:\n";
  for (const auto& c : table) {
    os << "  " << c.name << std::string(c.name.size() < 20 ? 20 - c.name.size() : 1, ' ') << c.summary << "\n";
  }
  os << "\nrun 'ecodyn <command> --help' for its keys\n";
}

void print_command_help(std::ostream& os, const CommandSpec& c) {
  os << "ecodyn " << c.name << ": " << c.summary << "\n\nkeys:\n";
  for (const auto& k : c.keys) {
    os << "  --" << k.name;
    if (k.default_value) os << " (default " << *k.default_value << ")";
    else if (k.required) os << " (required)";
    os << "\n      " << k.help << "\n";
  }
}

io::Format format_for(const Invocation& inv) {
  if (inv.format) {
    try {
      return io::parse_format(*inv.format);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("key 'format': ") + e.what());
    }
  }
  if (inv.out && std::filesystem::path(*inv.out).extension() == ".json") return io::Format::json;
  return io::Format::csv;
}

}  // namespace

std::size_t default_steps() {
  const char* env = std::getenv("ECODYN_DEFAULT_STEPS");
  if (env == nullptr) return kBuiltinDefaultSteps;
  const std::string s(env);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw ValidationError("ECODYN_DEFAULT_STEPS must be a positive integer, got '" + s + "'");
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const Invocation inv = parse_invocation(args);
    if (inv.version) {
      out << "ecodyn " << kVersion << "\n";
      return kExitOk;
    }
    const auto table = command_table(default_steps());
    if (inv.command.empty()) {
      if (inv.help) {
        print_usage(out, table);
        return kExitOk;
      }
      print_usage(err, table);
      return kExitValidation;
    }
    const CommandSpec* spec = nullptr;
    for (const auto& c : table) {
      if (c.name == inv.command) spec = &c;
    }
    if (spec == nullptr) throw ValidationError("unknown command '" + inv.command + "'");
    if (inv.help) {
      print_command_help(out, *spec);
      return kExitOk;
    }

    const Params params(*spec, inv);
    const io::Format format = format_for(inv);
    const io::Report report = spec->run(params);
    const std::string text = io::render(report, format, {spec->name, params.resolved()});
    if (inv.out) {
      io::write_atomic(*inv.out, text);
    } else {
      out << text;
      out.flush();
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "ecodyn: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "ecodyn: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const io::IoError& e) {
    err << "ecodyn: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "ecodyn: internal error: " << e.what() << "\n";
    return kExitIo;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ecodyn::cli
