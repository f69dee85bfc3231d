#pragma once
// Brute-force reference implementations used only by tests. None of these
// call into the simplex or the checkers they are compared against.

#include <algorithm>
#include <optional>
#include <vector>

#include "spl/fspp.hpp"
#include "spl/pe.hpp"
#include "spl/rational.hpp"

namespace spl::oracle {

struct DenseConstraint {
  std::vector<Rational> coeffs;
  bool equality = false;
  Rational rhs;
};

// Solves a square system; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct VertexOptimum {
  std::vector<Rational> x;
  Rational value;
};

// Maximum of objective over the basic feasible solutions of
// {x >= 0, constraints}: every choice of n linearly independent active rows
// (equalities always active) is solved and checked. nullopt when no basic
// feasible solution exists. Assumes the feasible region is bounded.
inline std::optional<VertexOptimum> max_over_vertices(const std::vector<Rational>& objective,
                                                      const std::vector<DenseConstraint>& cons) {
  const std::size_t n = objective.size();
  std::vector<DenseConstraint> rows = cons;
  for (std::size_t j = 0; j < n; ++j) {
    DenseConstraint nonneg{std::vector<Rational>(n), false, Rational(0)};
    nonneg.coeffs[j] = Rational(1);
    rows.push_back(nonneg);
  }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (const auto& xi : x)
      if (xi.sign() < 0) return false;
    for (const auto& c : cons) {
      Rational lhs;
      for (std::size_t j = 0; j < n; ++j) lhs += c.coeffs[j] * x[j];
      if (c.equality ? lhs != c.rhs : lhs > c.rhs) return false;
    }
    return true;
  };

  std::optional<VertexOptimum> best;
  std::vector<bool> pick(rows.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(n, rows.size())), true);
  if (n == 0) return VertexOptimum{{}, Rational(0)};
  // Enumerate all n-subsets in lexicographic order of selection masks.
  std::sort(pick.begin(), pick.end());
  do {
    bool has_all_equalities = true;
    for (std::size_t i = 0; i < cons.size(); ++i)
      if (cons[i].equality && !pick[i]) has_all_equalities = false;
    if (!has_all_equalities) continue;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (pick[i]) {
        a.push_back(rows[i].coeffs);
        b.push_back(rows[i].rhs);
      }
    auto x = solve_square(a, b);
    if (!x || !feasible(*x)) continue;
    Rational value;
    for (std::size_t j = 0; j < n; ++j) value += objective[j] * (*x)[j];
    if (!best || value > best->value) best = VertexOptimum{*x, value};
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

// Best-response value of `player` by vertex enumeration over its edges,
// building capacity rows straight from edge membership.
inline Rational best_response_value(const HypergraphGame& game, const NodeId& player, const GameWeights& w) {
  const auto& es = game.edges_of(player);
  std::vector<Rational> objective;
  for (const auto& e : es) objective.push_back(e.payoff);
  std::vector<DenseConstraint> cons;
  cons.push_back({std::vector<Rational>(es.size(), Rational(1)), true, Rational(1)});
  for (const auto& other : game.players) {
    if (other == player) continue;
    for (const auto& oe : game.edges_of(other)) {
      DenseConstraint row{std::vector<Rational>(es.size()), false, w.get(other, oe.id)};
      bool used = false;
      for (std::size_t i = 0; i < es.size(); ++i)
        if (std::find(es[i].members.begin(), es[i].members.end(), oe.for_strategy) != es[i].members.end()) {
          row.coeffs[i] = Rational(1);
          used = true;
        }
      if (used) cons.push_back(row);
    }
  }
  return max_over_vertices(objective, cons)->value;
}

// q_v(P) by counting pairs: Q is below-or-tied with P iff P's class index is
// not larger than Q's.
inline int rank_by_pairs(const PreferenceOrder& order, const Path& p) {
  auto class_of = [&](const Path& x) {
    for (std::size_t i = 0; i < order.classes.size(); ++i)
      if (std::find(order.classes[i].begin(), order.classes[i].end(), x) != order.classes[i].end()) return i;
    return order.classes.size();
  };
  int count = 0;
  for (const auto& cls : order.classes)
    for (const auto& q : cls)
      if (class_of(p) <= class_of(q)) ++count;
  return count;
}

}  // namespace spl::oracle
