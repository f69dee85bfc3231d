#pragma once

#include <map>
#include <string>
#include <vector>

#include "spl/rational.hpp"

namespace spl {

enum class Relation { LessEqual, Equal };

struct LinearConstraint {
  std::map<std::string, Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::vector<std::string> variables;
  std::map<std::string, Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::map<std::string, Rational> assignment;  // every variable, Optimal only
  Rational value;
};

// Two-phase dense-tableau simplex over exact rationals with Bland's rule.
// Throws Error on duplicate variables or references to undeclared ones.
LpResult lp_maximize(const LinearProgram& lp);

}  // namespace spl
