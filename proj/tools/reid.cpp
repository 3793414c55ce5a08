// reid: command-line front end for twisted conjugacy computations.
//
//   reid info SPEC          group summary
//   reid twisted SPEC       Reidemeister number with oracle and character cross-checks
//   reid chartable SPEC     mod-p character table
//   reid abelian SPEC       cokernel / kernel of 1 - M on Z^k / L
//   reid prufer SPEC        fixed points on Z(p^inf)^d
//   reid corpus [CONFIG]    run the verification corpus (bundled one when CONFIG is omitted)
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reid/commands.hpp"
#include "reid/error.hpp"

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (const std::exception&) {
    throw reid::Error(reid::ErrorKind::ConfigError, std::string(name) + " must be a nonnegative integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted conjugacy classes, Reidemeister numbers and their finite-scale lemmas"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  bool pretty = false;
  bool compact = false;
  std::optional<std::size_t> cap;
  std::optional<unsigned> truncation;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", cap, "element cap for group closure and character tables (env REID_CAP)");
    sub->add_option("--truncation-level", truncation, "highest truncation level for Z(p^inf) checks (env REID_TRUNCATION_LEVEL)");
    sub->add_option("--seed", seed, "automorphism sampling seed");
    sub->add_option("--out", out_path, "write JSON here instead of stdout");
    sub->add_flag("--pretty", pretty, "indented JSON");
    sub->add_flag("--json", compact, "compact JSON (default)");
  };

  struct Sub {
    const char* name;
    const char* help;
    reid::CommandOutput (*run)(const reid::Json&, const reid::CommandOptions&);
  };
  const Sub subs[] = {
      {"info", "group summary", reid::cmd_info},
      {"twisted", "Reidemeister classes with cross-checks", reid::cmd_twisted},
      {"chartable", "mod-p character table", reid::cmd_chartable},
      {"abelian", "lattice abelian endomorphism report", reid::cmd_abelian},
      {"prufer", "quasicyclic endomorphism report", reid::cmd_prufer},
      {"corpus", "run the verification corpus", reid::cmd_corpus},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    auto* opt = sub->add_option("input", input, std::string(s.name) == "corpus" ? "corpus configuration (JSON)" : "spec file (JSON)");
    if (std::string(s.name) != "corpus") opt->required();
    add_common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : reid::kExitInputError;
  }

  const Sub* chosen = nullptr;
  for (const auto& s : subs)
    if (app.got_subcommand(s.name)) chosen = &s;

  try {
    reid::CommandOptions options;
    const std::size_t element_cap = cap.value_or(env_or("REID_CAP", options.group.closure_cap));
    options.group.closure_cap = element_cap;
    if (cap || std::getenv("REID_CAP")) options.characters.order_cap = element_cap;
    options.quasicyclic.truncation_level =
        truncation.value_or(static_cast<unsigned>(env_or("REID_TRUNCATION_LEVEL", options.quasicyclic.truncation_level)));
    options.seed = seed;

    reid::Json in;
    if (std::string(chosen->name) == "corpus" && input.empty())
      in = reid::default_corpus_json();
    else
      in = reid::load_json_file(input);

    reid::CommandOutput result = chosen->run(in, options);
    const std::string text = result.result.dump(pretty ? 2 : -1) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw reid::Error(reid::ErrorKind::ConfigError, "cannot write " + out_path);
      out << text;
    }
    return result.exit_code;
  } catch (const reid::Error& e) {
    std::cerr << "reid: " << e.what() << "\n";
    return reid::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "reid: " << e.what() << "\n";
    return reid::kExitInputError;
  }
}
