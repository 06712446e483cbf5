// arbopack command-line front end. Talks to the library only through the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arbopack/arbopack.h"

namespace {

constexpr int kUsageError = ARBOPACK_ERR_INPUT;

struct Flags {
  std::string input;
  std::string packing;
  bool json = false;
  bool trace = false;
  bool paranoid = false;
  bool seedless = false;
  std::optional<unsigned> max_n;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Flag wins over ARBOPACK_MAX_N; 0 means library default.
std::optional<unsigned> enumeration_limit(const Flags& flags) {
  if (flags.max_n) return *flags.max_n;
  const char* env = std::getenv("ARBOPACK_MAX_N");
  if (!env || !*env) return 0U;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0 || value > 64) return std::nullopt;
  return static_cast<unsigned>(value);
}

int emit(arbopack_status status, arbopack_result* result, bool json) {
  if (result) {
    const bool failed = status >= ARBOPACK_ERR_INPUT;
    if (json) {
      std::cout << arbopack_result_json(result);
      if (failed) std::cerr << arbopack_result_text(result);
    } else {
      (failed ? std::cerr : std::cout) << arbopack_result_text(result);
    }
    arbopack_result_free(result);
  } else if (status != ARBOPACK_OK) {
    std::cerr << "error: " << arbopack_last_error() << '\n';
  }
  return static_cast<int>(status);
}

int run(const std::string& command, const Flags& flags) {
  const auto text = read_file(flags.input);
  if (!text) {
    std::cerr << "error: cannot read " << flags.input << '\n';
    return kUsageError;
  }
  arbopack_result* result = nullptr;

  if (command == "pieo-trace") {
    const auto status = arbopack_pieo_trace(text->data(), text->size(), &result);
    return emit(status, result, flags.json);
  }

  const auto limit = enumeration_limit(flags);
  if (!limit) {
    std::cerr << "error: ARBOPACK_MAX_N must be an integer in [1, 64]\n";
    return kUsageError;
  }
  arbopack_options options;
  arbopack_options_init(&options);
  options.max_n = *limit;
  options.paranoid = flags.paranoid ? 1 : -1;
  options.trace = flags.trace ? 1 : 0;

  arbopack_instance* instance = nullptr;
  if (auto status = arbopack_instance_load(text->data(), text->size(), &instance); status != ARBOPACK_OK) {
    std::cerr << "error: " << flags.input << ": " << arbopack_last_error() << '\n';
    return static_cast<int>(status);
  }

  int code = kUsageError;
  arbopack_status status = ARBOPACK_ERR_INPUT;
  bool json = flags.json;
  if (command == "check") {
    status = arbopack_check(instance, &options, &result);
  } else if (command == "solve") {
    // Solve output is always JSON so it can be fed back to `verify`.
    status = arbopack_solve(instance, &options, &result);
    json = true;
  } else if (command == "oracle") {
    status = arbopack_oracle(instance, &result);
  } else if (command == "verify") {
    if (const auto packing = read_file(flags.packing)) {
      status = arbopack_verify(instance, packing->data(), packing->size(), &result);
    } else {
      std::cerr << "error: cannot read " << flags.packing << '\n';
    }
  }
  if (result || status != ARBOPACK_ERR_INPUT) code = emit(status, result, json);
  arbopack_instance_free(instance);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packing of edge- and arc-disjoint spanning mixed arborescences with root bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(arbopack_version()));

  Flags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", flags.input, "instance document (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", flags.json, "emit JSON instead of text");
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option_function<unsigned>(
           "--max-n", [&](const unsigned& n) { flags.max_n = n; },
           "largest vertex count for exhaustive scans (default 10; overrides ARBOPACK_MAX_N)")
        ->check(CLI::Range(1U, 64U));
  };

  auto* check = app.add_subcommand("check", "decide feasibility and print a certificate");
  add_common(check);
  add_limits(check);

  auto* solve = app.add_subcommand("solve", "construct a packing (JSON) or report infeasibility");
  add_common(solve);
  add_limits(solve);
  solve->add_flag("--trace", flags.trace, "attach the orientation step log");
  solve->add_flag("--paranoid", flags.paranoid, "re-check invariants after every step");
  solve->add_flag("--seedless", flags.seedless, "accepted for compatibility; the solver never uses randomness");

  auto* verify = app.add_subcommand("verify", "verify a packing against an instance");
  add_common(verify);
  verify->add_option("--packing", flags.packing, "packing document (JSON)")->required()->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "brute-force search for a packing (|V| <= 5, |E|+|A| <= 9)");
  add_common(oracle);

  auto* pieo = app.add_subcommand("pieo-trace", "trace type-1 uncrossing of two disjoint set families");
  add_common(pieo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  for (const auto* sub : app.get_subcommands()) return run(sub->get_name(), flags);
  return kUsageError;
}
