#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace matchforge::asp::detail {

// Small DPLL over CNF with unit propagation and exhaustive model enumeration.
// Variables are 1-based; a literal is +v or -v. Sized for the desk-scale
// programs this library handles (a few hundred variables).
class ClauseSearch {
 public:
  explicit ClauseSearch(int vars = 0);

  int add_var();
  int vars() const noexcept { return static_cast<int>(value_.size()) - 1; }
  void add_clause(std::vector<int> lits);

  // Only these variables are branched on; every other variable must be forced
  // by propagation once they are all set. Defaults to all variables.
  void set_decision_vars(std::vector<int> vars) { decision_ = std::move(vars); }

  // Visits every total model. value[v] is 1 for true, 0 for false.
  // The visitor returns false to stop the search.
  void enumerate(const std::function<bool(const std::vector<std::int8_t>&)>& visit);

  bool satisfiable();

 private:
  bool assign(int lit);
  bool propagate();
  void undo(std::size_t trail_size);
  int pick_branch() const;
  bool search(const std::function<bool(const std::vector<std::int8_t>&)>& visit);

  static std::size_t slot(int lit) { return lit > 0 ? 2 * static_cast<std::size_t>(lit) : 2 * static_cast<std::size_t>(-lit) + 1; }
  bool is_true(int lit) const;
  bool is_false(int lit) const;

  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<std::size_t>> occurs_;  // clause ids per literal slot
  std::vector<std::int8_t> value_;                 // -1 unassigned, else 0/1
  std::vector<int> trail_;
  std::size_t queue_head_ = 0;
  std::vector<int> decision_;
  bool trivially_unsat_ = false;
};

}  // namespace matchforge::asp::detail
