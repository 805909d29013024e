// twk: command line front end. Exit codes: 0 ok, 2 parse error, 3 domain
// error, 4 precision error, 5 resource error; 1 for a failing verify run or
// an internal error.

#include <iostream>

#include "commands.hpp"
#include "twk/conventions.hpp"
#include "twk/errors.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Failure {
  const char* status;
  int code;
};

Failure classify(const std::exception& e) {
  if (dynamic_cast<const twk::ParseError*>(&e)) return {"parse-error", 2};
  if (dynamic_cast<const twk::DomainError*>(&e)) return {"domain-error", 3};
  if (dynamic_cast<const twk::PrecisionError*>(&e)) return {"precision-error", 4};
  if (dynamic_cast<const twk::ResourceError*>(&e)) return {"resource-error", 5};
  return {"internal-error", 1};
}

int report(const twk::cli::Globals& g, const char* status, int code, const std::string& message) {
  std::cerr << "twk: " << status << ": " << message << std::endl;
  if (g.json) std::cout << twk::cli::Json{{"status", status}, {"diagnostics", {message}}}.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace twk::cli;
  const std::string version = std::string("twk ") + kVersion + " (conventions " + twk::convention_hash_hex() + ")";

  CLI::App app("Exact local-global number theory, twistor geometry and finite Weil representations.", "twk");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", version);

  Globals g;
  app.add_flag("--json", g.json, "compact JSON on stdout");
  app.add_option("--seed", g.seed, "seed for randomized runs");
  app.add_option("--precision", g.precision, "p-adic relative precision")->check(CLI::Range(1L, 2000L));

  Dispatch dispatch;
  std::vector<std::shared_ptr<void>> keep;
  register_commands(app, g, dispatch, keep);

  auto* ver = app.add_subcommand("version", "version and convention registry");
  ver->callback([&dispatch] {
    dispatch.action = [] {
      Json registry = Json::object();
      for (const auto& [name, value] : twk::convention_registry()) registry[name] = value;
      return Json{{"version", kVersion}, {"conventions", registry}, {"registry_hash", twk::convention_hash_hex()}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report(g, "parse-error", 2, e.what());
  } catch (const std::exception& e) {
    const auto f = classify(e);
    return report(g, f.status, f.code, e.what());
  }

  try {
    if (!dispatch.action) return report(g, "parse-error", 2, "no command");
    const Json payload = dispatch.action();
    if (g.json)
      std::cout << payload.dump() << std::endl;
    else if (dispatch.pretty)
      std::cout << dispatch.pretty(payload) << std::endl;
    else
      std::cout << payload.dump(2) << std::endl;
    return dispatch.exit_code;
  } catch (const std::exception& e) {
    const auto f = classify(e);
    return report(g, f.status, f.code, e.what());
  }
}
