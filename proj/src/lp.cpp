#include "spl/lp.hpp"

#include <set>

#include "spl/fspp.hpp"

namespace spl {

namespace {

using Row = std::vector<Rational>;

struct Tableau {
  std::vector<Row> rows;          // last entry of each row is the rhs
  std::vector<std::size_t> basis;  // basic column per row
  std::size_t columns = 0;         // excluding rhs

  const Rational& rhs(std::size_t i) const { return rows[i][columns]; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }
};

enum class Phase { Optimal, Unbounded };

// Maximizes cost . x over the current tableau using Bland's rule. Columns
// with allowed[j] == false never enter the basis.
Phase run_simplex(Tableau& t, const Row& cost, const std::vector<bool>& allowed) {
  for (;;) {
    std::size_t entering = t.columns;
    for (std::size_t j = 0; j < t.columns && entering == t.columns; ++j) {
      if (!allowed[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (!t.rows[i][j].is_zero()) reduced -= cost[t.basis[i]] * t.rows[i][j];
      if (reduced.sign() > 0) entering = j;
    }
    if (entering == t.columns) return Phase::Optimal;

    std::size_t leaving = t.rows.size();
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i][entering].sign() <= 0) continue;
      Rational ratio = t.rhs(i) / t.rows[i][entering];
      if (leaving == t.rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == t.rows.size()) return Phase::Unbounded;
    t.pivot(leaving, entering);
  }
}

}  // namespace

LpResult lp_maximize(const LinearProgram& lp) {
  std::map<std::string, std::size_t> index;
  for (const auto& v : lp.variables)
    if (!index.emplace(v, index.size()).second) throw Error("lp: duplicate variable \"" + v + "\"");
  for (const auto& [v, _] : lp.objective)
    if (!index.count(v)) throw Error("lp: objective references undeclared variable \"" + v + "\"");
  for (const auto& c : lp.constraints)
    for (const auto& [v, _] : c.coeffs)
      if (!index.count(v)) throw Error("lp: constraint references undeclared variable \"" + v + "\"");

  const std::size_t n = lp.variables.size();
  const std::size_t m = lp.constraints.size();

  // Normalize to nonnegative rhs. A negated <= row becomes a >= row.
  struct Normalized {
    Row coeffs;
    Rational rhs;
    int kind;  // 0: <=, 1: >=, 2: =
  };
  std::vector<Normalized> norm;
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& c : lp.constraints) {
    Normalized row{Row(n), c.rhs, c.relation == Relation::Equal ? 2 : 0};
    for (const auto& [v, a] : c.coeffs) row.coeffs[index[v]] = a;
    if (row.rhs.sign() < 0) {
      for (auto& a : row.coeffs) a = -a;
      row.rhs = -row.rhs;
      if (row.kind == 0) row.kind = 1;
    }
    if (row.kind != 2) ++n_slack;
    if (row.kind != 0) ++n_art;
    norm.push_back(std::move(row));
  }

  Tableau t;
  t.columns = n + n_slack + n_art;
  t.rows.assign(m, Row(t.columns + 1));
  t.basis.assign(m, 0);
  std::size_t slack = n, art = n + n_slack;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = norm[i].coeffs[j];
    t.rows[i][t.columns] = norm[i].rhs;
    if (norm[i].kind == 0) {
      t.rows[i][slack] = Rational(1);
      t.basis[i] = slack++;
    } else {
      if (norm[i].kind == 1) t.rows[i][slack++] = Rational(-1);
      t.rows[i][art] = Rational(1);
      t.basis[i] = art++;
    }
  }
  const std::size_t first_art = n + n_slack;

  // Phase 1: maximize -(sum of artificials).
  std::vector<bool> allowed(t.columns, true);
  if (n_art > 0) {
    Row phase1(t.columns);
    for (std::size_t j = first_art; j < t.columns; ++j) phase1[j] = Rational(-1);
    run_simplex(t, phase1, allowed);
    Rational infeasibility;
    for (std::size_t i = 0; i < m; ++i)
      if (t.basis[i] >= first_art) infeasibility += t.rhs(i);
    if (infeasibility.sign() > 0) return {LpStatus::Infeasible, {}, Rational(0)};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::size_t col = first_art;
      for (std::size_t j = 0; j < first_art && col == first_art; ++j)
        if (!t.rows[i][j].is_zero()) col = j;
      if (col == first_art) {
        t.rows.erase(t.rows.begin() + static_cast<long>(i));
        t.basis.erase(t.basis.begin() + static_cast<long>(i));
        continue;
      }
      t.pivot(i, col);
      ++i;
    }
    for (std::size_t j = first_art; j < t.columns; ++j) allowed[j] = false;
  }

  Row cost(t.columns);
  for (const auto& [v, c] : lp.objective) cost[index[v]] = c;
  if (run_simplex(t, cost, allowed) == Phase::Unbounded) return {LpStatus::Unbounded, {}, Rational(0)};

  LpResult res{LpStatus::Optimal, {}, Rational(0)};
  for (const auto& v : lp.variables) res.assignment[v] = Rational(0);
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) res.assignment[lp.variables[t.basis[i]]] = t.rhs(i);
  for (const auto& [v, c] : lp.objective) res.value += c * res.assignment[v];
  return res;
}

}  // namespace spl
