// spl: command-line front end for checking, reducing and searching
// fractional stable paths instances.
//
// Exit codes: 0 success / property holds, 1 property violated, 2 usage or
// input error.

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "spl/generators.hpp"
#include "spl/io.hpp"
#include "spl/reduction.hpp"
#include "spl/solvers.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) std::cout << contents;
  else spl::write_file(out_path, contents);
}

spl::FsppInstance load_valid_instance(const std::string& path) {
  spl::FsppInstance inst = spl::parse_instance(spl::read_file(path));
  auto report = spl::validate_instance(inst);
  if (!report.valid()) throw spl::Error("invalid instance:\n" + spl::emit_validation_report(report));
  return inst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional stable paths / personalized equilibrium toolkit"};
  app.require_subcommand(1);

  std::string instance_path, weights_path, game_path, out_path, report_path, direction, kind, method = "brd",
                                                                                          cex_dir;
  int max_rounds = 100, trials = 100, bound = 6, n = 3, k = 2, max_paths = 3;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "Check instance invariants");
  validate->add_option("INSTANCE", instance_path)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the hypergraph game of an instance");
  reduce_cmd->add_option("INSTANCE", instance_path)->required();
  reduce_cmd->add_option("-o", out_path)->required();

  auto* check_stable = app.add_subcommand("check-stable", "Check fractional stability of path weights");
  check_stable->add_option("INSTANCE", instance_path)->required();
  check_stable->add_option("WEIGHTS", weights_path)->required();
  check_stable->add_option("--report", report_path);

  auto* check_pe = app.add_subcommand("check-pe", "Check a personalized equilibrium");
  check_pe->add_option("GAME", game_path)->required();
  check_pe->add_option("GWEIGHTS", weights_path)->required();
  check_pe->add_option("--report", report_path);

  auto* transport = app.add_subcommand("transport", "Move weights between the instance and its game");
  transport->add_option("DIRECTION", direction)->required()->check(CLI::IsMember({"to-game", "to-fspp"}));
  transport->add_option("INSTANCE", instance_path)->required();
  transport->add_option("WEIGHTS", weights_path)->required();
  transport->add_option("-o", out_path)->required();

  auto* solve = app.add_subcommand("solve", "Search for stable solutions via best-response dynamics");
  solve->add_option("INSTANCE", instance_path)->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"brd"}));
  solve->add_option("--max-rounds", max_rounds)->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--seed", seed)->required();
  solve->add_option("-o", out_path);

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare both checkers on sampled weights");
  crosscheck->add_option("INSTANCE", instance_path)->required();
  crosscheck->add_option("--trials", trials)->required()->check(CLI::NonNegativeNumber);
  crosscheck->add_option("--seed", seed)->required();
  crosscheck->add_option("--denominator-bound", bound)->required()->check(CLI::PositiveNumber);
  crosscheck->add_option("--counterexample-dir", cex_dir);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"chain", "disagree", "random"}));
  gen->add_option("--n", n);
  gen->add_option("--k", k);
  gen->add_option("--max-paths", max_paths);
  gen->add_option("--seed", seed);
  gen->add_option("-o", out_path)->required();

  auto* laminarity = app.add_subcommand("laminarity", "Check that each player's edges are laminar");
  laminarity->add_option("GAME", game_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) {
      auto report = spl::validate_instance(spl::parse_instance(spl::read_file(instance_path)));
      std::cout << spl::emit_validation_report(report);
      return report.valid() ? kOk : kViolated;
    }
    if (*reduce_cmd) {
      spl::write_file(out_path, spl::emit_game(spl::reduce(load_valid_instance(instance_path))));
      return kOk;
    }
    if (*check_stable) {
      auto inst = load_valid_instance(instance_path);
      auto verdict = spl::is_stable(inst, spl::parse_path_weights(spl::read_file(weights_path)));
      emit(report_path, spl::emit_stability_verdict(verdict));
      if (!report_path.empty()) std::cout << (verdict.stable ? "stable\n" : "not stable\n");
      return verdict.stable ? kOk : kViolated;
    }
    if (*check_pe) {
      auto game = spl::parse_game(spl::read_file(game_path));
      auto verdict = spl::is_personalized_equilibrium(game, spl::parse_game_weights(spl::read_file(weights_path)));
      emit(report_path, spl::emit_equilibrium_verdict(verdict));
      if (!report_path.empty()) std::cout << (verdict.is_equilibrium ? "equilibrium\n" : "not an equilibrium\n");
      return verdict.is_equilibrium ? kOk : kViolated;
    }
    if (*transport) {
      auto inst = load_valid_instance(instance_path);
      if (direction == "to-game") {
        auto w = spl::parse_path_weights(spl::read_file(weights_path));
        spl::write_file(out_path, spl::emit_game_weights(spl::transport_to_game(inst, w)));
      } else {
        auto w = spl::parse_game_weights(spl::read_file(weights_path));
        spl::write_file(out_path, spl::emit_path_weights(spl::transport_to_fspp(spl::reduce(inst), w)));
      }
      return kOk;
    }
    if (*solve) {
      auto solutions = spl::search_stable(load_valid_instance(instance_path), max_rounds, seed);
      emit(out_path, spl::emit_solutions(solutions));
      if (!out_path.empty()) std::cout << solutions.size() << " stable solution(s)\n";
      return solutions.empty() ? kViolated : kOk;
    }
    if (*crosscheck) {
      auto inst = load_valid_instance(instance_path);
      auto report = spl::crosscheck_theorem(inst, trials, seed, bound);
      if (!cex_dir.empty() && !report.disagreements.empty()) {
        std::filesystem::create_directories(cex_dir);
        for (const auto& c : report.disagreements)
          spl::write_file((std::filesystem::path(cex_dir) / ("counterexample-" + std::to_string(c.trial) + ".json")).string(),
                          spl::emit_counterexample(inst, c));
      }
      std::cout << spl::emit_crosscheck_report(report);
      return report.disagreements.empty() ? kOk : kViolated;
    }
    if (*gen) {
      spl::FsppInstance inst = kind == "chain"      ? spl::gen_chain(n)
                               : kind == "disagree" ? spl::gen_disagree(k)
                                                    : spl::gen_random(n, max_paths, seed);
      spl::write_file(out_path, spl::emit_instance(inst));
      return kOk;
    }
    if (*laminarity) {
      auto result = spl::check_laminarity(spl::parse_game(spl::read_file(game_path)));
      std::cout << spl::emit_laminarity(result);
      return result.pass ? kOk : kViolated;
    }
  } catch (const std::exception& e) {
    std::cerr << "spl: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
