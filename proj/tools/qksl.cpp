// qksl: command-line runner for the exact quaternionic Kaehler fiber-algebra
// verification suites.

#include <CLI11.hpp>
#include <iostream>

#include "qk/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification of quaternionic Kaehler fiber algebra"};
  app.require_subcommand(1);

  std::string suite = "all";
  bool json = false, no_timing = false;
  int n_max = 3, r_max = 3;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("name", suite, "suite name or 'all'");
  verify->add_option("--suite", suite, "suite name (same as the positional)")
      ->excludes("name");
  verify->add_flag("--json", json, "machine-readable output");
  verify->add_flag("--no-timing", no_timing, "suppress timing fields");
  verify->add_option("--n-max", n_max, "largest quaternionic dimension")
      ->check(CLI::Range(2, 4));
  verify->add_option("--r-max", r_max, "largest Sym^r H degree")
      ->check(CLI::Range(0, 6));

  int dims_n = 2;
  bool dims_json = false;
  auto* dims = app.add_subcommand("dims", "spinor rank table at a given n");
  dims->add_option("n", dims_n, "quaternionic dimension")->required();
  dims->add_flag("--json", dims_json);

  bool wolf_json = false;
  int wolf_n = 2;
  auto* wolf = app.add_subcommand("wolf-table", "the eight-entry Wolf table");
  wolf->add_flag("--json", wolf_json);
  wolf->add_option("--n", wolf_n, "n for the classical families")
      ->check(CLI::Range(2, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (verify->parsed()) {
    if (!qk::is_suite_name(suite)) {
      std::cerr << "unknown suite '" << suite << "'; available:";
      for (const auto& s : qk::suite_names()) std::cerr << " " << s;
      std::cerr << " all\n";
      return 2;
    }
    qk::SuiteOptions opt;
    opt.n_max = n_max;
    opt.r_max = r_max;
    opt.timing = !no_timing;
    const qk::SuiteResult res = qk::run_suite(suite, opt);
    if (json) {
      std::cout << qk::suite_result_json(res, opt.timing) << "\n";
    } else {
      std::cout << qk::suite_result_table(res, opt.timing);
      if (suite == "wolf" || suite == "all")
        std::cout << "\n" << qk::wolf_rows_table(qk::wolf_rows(n_max >= 2 ? 2 : 2));
    }
    return res.pass() ? 0 : 1;
  }

  if (dims->parsed()) {
    if (dims_n < 1) {
      std::cerr << "dims: n must be >= 1\n";
      return 2;
    }
    const qk::DimsResult d = qk::compute_dims(dims_n);
    std::cout << (dims_json ? qk::dims_json(d) + "\n" : qk::dims_table(d));
    return (d.total == d.expected_total && d.prim_dims_ok) ? 0 : 1;
  }

  if (wolf->parsed()) {
    const auto rows = qk::wolf_rows(wolf_n);
    std::cout << (wolf_json ? qk::wolf_rows_json(rows) + "\n"
                            : qk::wolf_rows_table(rows));
    for (const auto& r : rows)
      if (r.regularity == "INCONSISTENT") return 1;
    return 0;
  }
  return 2;
}
