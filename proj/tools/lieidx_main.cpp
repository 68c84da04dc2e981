#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "lieidx/errors.hpp"
#include "lieidx/report.hpp"

namespace {

constexpr int kUsageError = 2;

std::string default_case_dir() {
  if (const char* env = std::getenv("LIEIDX_CASE_DIR")) return env;
  return LIEIDX_DEFAULT_CASE_DIR;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact index computations for centralizers of nilpotent elements"};
  app.require_subcommand(1);

  std::string type_name;
  lieidx::RunConfig cfg;
  cfg.output_format = lieidx::RunConfig::Format::tsv;
  bool json = false;

  auto add_common = [&](CLI::App* cmd, bool type_required) {
    auto* opt = cmd->add_option("--type", type_name, "Cartan type such as A3, B2, E7");
    if (type_required) opt->required();
  };
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
    cmd->add_option("--budget", cfg.sample_budget, "Functionals sampled per certificate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--case", cfg.case_files, "Case file (repeatable)");
    cmd->add_flag("--json", json, "Emit JSON instead of TSV");
    cmd->add_flag("--strict", cfg.strict, "Exit nonzero when a row is UNRESOLVED");
    cmd->add_flag("--timings", cfg.timings, "Include per-row timings in JSON output");
    cmd->add_option("--parallelism", cfg.parallelism, "Worker threads for independent rows")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* algebra = app.add_subcommand("algebra", "Algebra data");
  algebra->require_subcommand(1);
  auto* info = algebra->add_subcommand("info", "Root system, Cartan matrix and degrees as JSON");
  add_common(info, true);

  auto* orbits = app.add_subcommand("orbits", "Nilpotent orbits");
  orbits->require_subcommand(1);
  auto* list = orbits->add_subcommand("list", "Orbits swept by the verification suites, as JSON");
  add_common(list, true);

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* elashvili = verify->add_subcommand("elashvili", "Certify ind g^e = rank g for every orbit");
  add_common(elashvili, true);
  add_run_flags(elashvili);
  auto* bolsinov = verify->add_subcommand("bolsinov", "Dimension criterion for argument-shift spaces");
  add_common(bolsinov, true);
  add_run_flags(bolsinov);
  auto* appendix = verify->add_subcommand("appendix", "Replay rigid-orbit case files");
  add_common(appendix, false);
  add_run_flags(appendix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (!type_name.empty()) cfg.cartan_type = lieidx::CartanType::parse(type_name);
    if (info->parsed()) {
      std::cout << lieidx::algebra_info(*cfg.cartan_type).dump(2) << "\n";
      return 0;
    }
    if (list->parsed()) {
      std::cout << lieidx::orbits_list(*cfg.cartan_type).dump(2) << "\n";
      return 0;
    }
    if (json) cfg.output_format = lieidx::RunConfig::Format::json;
    lieidx::VerificationReport report;
    if (elashvili->parsed()) {
      cfg.command = "verify elashvili";
      report = lieidx::cmd_verify_elashvili(cfg);
    } else if (bolsinov->parsed()) {
      cfg.command = "verify bolsinov";
      report = lieidx::cmd_verify_bolsinov(cfg);
    } else {
      cfg.command = "verify appendix";
      cfg.data_dir = default_case_dir();
      report = lieidx::cmd_verify_appendix(cfg);
    }
    if (cfg.output_format == lieidx::RunConfig::Format::json)
      std::cout << lieidx::to_json(report, cfg.timings).dump(2) << "\n";
    else
      std::cout << lieidx::to_tsv(report);
    return report.exit_code(cfg.strict);
  } catch (const lieidx::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
