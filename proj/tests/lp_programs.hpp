#pragma once
// Random small linear programs paired with their dense form for the
// vertex-enumeration oracle. Shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "oracles.hpp"
#include "spl/lp.hpp"
#include "spl/random.hpp"

namespace spl::testing {

struct RandomProgram {
  LinearProgram lp;
  std::vector<Rational> objective;
  std::vector<oracle::DenseConstraint> dense;
};

// At most 6 variables and 8 constraints; the last constraint bounds the
// total so the program is never unbounded.
inline RandomProgram random_program(std::uint64_t seed) {
  Rng rng(seed);
  const int n = static_cast<int>(rng.between(1, 6));
  const int m = static_cast<int>(rng.between(1, 8));
  RandomProgram rp;
  for (int j = 0; j < n; ++j) {
    rp.lp.variables.push_back("x" + std::to_string(j));
    Rational c(rng.between(-4, 6), rng.between(1, 3));
    rp.lp.objective[rp.lp.variables.back()] = c;
    rp.objective.push_back(c);
  }
  for (int i = 0; i < m; ++i) {
    const bool bounding = i == m - 1;
    LinearConstraint c;
    oracle::DenseConstraint d{std::vector<Rational>(static_cast<std::size_t>(n)), false, Rational(0)};
    for (int j = 0; j < n; ++j) {
      Rational a = bounding ? Rational(1) : Rational(rng.between(-3, 3), rng.between(1, 2));
      if (rng.chance(1, 4) && !bounding) a = Rational(0);
      if (!a.is_zero()) c.coeffs[rp.lp.variables[static_cast<std::size_t>(j)]] = a;
      d.coeffs[static_cast<std::size_t>(j)] = a;
    }
    c.relation = (!bounding && rng.chance(1, 5)) ? Relation::Equal : Relation::LessEqual;
    c.rhs = bounding ? Rational(rng.between(1, 8)) : Rational(rng.between(-3, 6), rng.between(1, 2));
    d.equality = c.relation == Relation::Equal;
    d.rhs = c.rhs;
    rp.lp.constraints.push_back(c);
    rp.dense.push_back(d);
  }
  return rp;
}

}  // namespace spl::testing
