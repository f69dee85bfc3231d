#pragma once

#include <stdexcept>
#include <string>

#include "spl/fspp.hpp"
#include "spl/pe.hpp"
#include "spl/reduction.hpp"
#include "spl/solvers.hpp"

namespace spl {

// Schema or syntax error. what() starts with the JSON path, e.g.
// "$.paths.1[0]: expected array".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All emitters produce canonical JSON: sorted keys, arrays in model order,
// two-space indent, trailing newline. Rationals are "n" or "n/d" strings.
FsppInstance parse_instance(const std::string& text);
std::string emit_instance(const FsppInstance& inst);

PathWeights parse_path_weights(const std::string& text);
std::string emit_path_weights(const PathWeights& w);

HypergraphGame parse_game(const std::string& text);
std::string emit_game(const HypergraphGame& game);

GameWeights parse_game_weights(const std::string& text);
std::string emit_game_weights(const GameWeights& w);

StabilityVerdict parse_stability_verdict(const std::string& text);
std::string emit_stability_verdict(const StabilityVerdict& v);

EquilibriumVerdict parse_equilibrium_verdict(const std::string& text);
std::string emit_equilibrium_verdict(const EquilibriumVerdict& v);

std::string emit_validation_report(const ValidationReport& r);
std::string emit_laminarity(const LaminarityResult& r);
std::string emit_search_report(const SearchReport& r);
std::string emit_solutions(const std::vector<PathWeights>& solutions);
std::string emit_crosscheck_report(const CrosscheckReport& r);
std::string emit_counterexample(const FsppInstance& inst, const CrosscheckCase& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace spl
