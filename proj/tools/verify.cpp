// verify: certificate suites for the positive-characteristic hypersurface
// families. See README.md for the suite list and the report format.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "imperf/errors.hpp"
#include "imperf/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for hypersurfaces over imperfect fields"};
  app.require_subcommand(1);

  imperf::SuiteConfig cfg;
  bool budget_given = false;
  std::string elems_arg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic (odd prime for kollar)");
    sub->add_option("--n", cfg.n, "number of scalars for the degree-p family");
    sub->add_option("--point-degree", cfg.point_degree,
                    "degree bound for the rational point search");
    sub->add_option("--budget", cfg.budget,
                    "candidate budget for exhaustive searches")
        ->each([&](const std::string&) { budget_given = true; });
    sub->add_option("--seed", cfg.seed, "seed for randomized spot checks");
    sub->add_option("--format", cfg.format, "report format: json or md")
        ->check(CLI::IsMember({"json", "md"}));
    sub->add_flag("--timings", cfg.timings,
                  "include wall times (reports stop being byte-identical)");
    sub->add_option("--field", cfg.field,
                    "field preset for --elems, e.g. \"field GF(3)(t1,t2)\"");
    sub->add_option("--elems", elems_arg,
                    "comma-separated field elements for the pindep suite");
  };

  for (const char* name : {"pindep", "kollar", "cubic2", "all"})
    add_common(app.add_subcommand(name));

  CLI11_PARSE(app, argc, argv);

  cfg.suite = app.get_subcommands().front()->get_name();
  if (!budget_given) {
    if (const char* env = std::getenv("VERIFY_BUDGET")) {
      try {
        cfg.budget = std::stoull(env);
      } catch (...) {
        std::cerr << "error: VERIFY_BUDGET is not a number\n";
        return 2;
      }
    }
  }
  if (!elems_arg.empty()) {
    std::string current;
    for (char c : elems_arg) {
      if (c == ',') {
        if (!current.empty()) cfg.elems.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) cfg.elems.push_back(current);
  }

  try {
    imperf::Report report = imperf::run_suite(cfg);
    std::cout << imperf::emit_report(report, cfg.format);
    return report.all_passed() ? 0 : 1;
  } catch (const imperf::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const imperf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
