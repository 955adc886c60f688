#include "clause_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace matchforge::asp::detail {

ClauseSearch::ClauseSearch(int vars) : occurs_(2 * static_cast<std::size_t>(vars) + 2), value_(vars + 1, -1) {}

int ClauseSearch::add_var() {
  value_.push_back(-1);
  occurs_.resize(occurs_.size() + 2);
  return vars();
}

void ClauseSearch::add_clause(std::vector<int> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (int l : lits) {
    if (l == 0 || std::abs(l) > vars()) throw std::invalid_argument("literal out of range");
    // Tautologies never constrain anything.
    if (std::binary_search(lits.begin(), lits.end(), -l)) return;
  }
  if (lits.empty()) trivially_unsat_ = true;
  const std::size_t id = clauses_.size();
  for (int l : lits) occurs_[slot(l)].push_back(id);
  clauses_.push_back(std::move(lits));
}

bool ClauseSearch::is_true(int lit) const {
  const auto v = value_[std::abs(lit)];
  return v != -1 && (v == 1) == (lit > 0);
}

bool ClauseSearch::is_false(int lit) const {
  const auto v = value_[std::abs(lit)];
  return v != -1 && (v == 1) != (lit > 0);
}

bool ClauseSearch::assign(int lit) {
  if (is_true(lit)) return true;
  if (is_false(lit)) return false;
  value_[std::abs(lit)] = lit > 0 ? 1 : 0;
  trail_.push_back(lit);
  return true;
}

// Visits the clauses of every literal made false since the last call.
bool ClauseSearch::propagate() {
  while (queue_head_ < trail_.size()) {
    const int falsified = -trail_[queue_head_++];
    for (std::size_t id : occurs_[slot(falsified)]) {
      int open = 0;
      int last_open = 0;
      bool satisfied = false;
      for (int l : clauses_[id]) {
        if (is_true(l)) {
          satisfied = true;
          break;
        }
        if (!is_false(l)) {
          ++open;
          last_open = l;
        }
      }
      if (satisfied) continue;
      if (open == 0) return false;
      if (open == 1) assign(last_open);
    }
  }
  return true;
}

void ClauseSearch::undo(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    value_[std::abs(trail_.back())] = -1;
    trail_.pop_back();
  }
  queue_head_ = std::min(queue_head_, trail_size);
}

// Unassigned decision variable occurring in the most unsatisfied clauses;
// lowest index on ties. 0 when none is left.
int ClauseSearch::pick_branch() const {
  std::vector<int> score(value_.size(), 0);
  for (const auto& c : clauses_) {
    if (std::any_of(c.begin(), c.end(), [&](int l) { return is_true(l); })) continue;
    for (int l : c)
      if (value_[std::abs(l)] == -1) ++score[std::abs(l)];
  }
  int best = 0;
  auto consider = [&](int v) {
    if (value_[v] != -1) return;
    if (best == 0 || score[v] > score[best] || (score[v] == score[best] && v < best)) best = v;
  };
  if (decision_.empty()) {
    for (int v = 1; v <= vars(); ++v) consider(v);
  } else {
    for (int v : decision_) consider(v);
  }
  return best;
}

bool ClauseSearch::search(const std::function<bool(const std::vector<std::int8_t>&)>& visit) {
  if (!propagate()) return true;
  const int v = pick_branch();
  if (v == 0) {
    for (int u = 1; u <= vars(); ++u)
      if (value_[u] == -1) throw std::logic_error("non-decision variable left unassigned");
    return visit(value_);
  }
  const std::size_t mark = trail_.size();
  for (int lit : {v, -v}) {
    assign(lit);
    if (!search(visit)) return false;
    undo(mark);
  }
  return true;
}

void ClauseSearch::enumerate(const std::function<bool(const std::vector<std::int8_t>&)>& visit) {
  if (trivially_unsat_) return;
  undo(0);
  // Unit clauses have no falsified literal to trigger them.
  for (const auto& c : clauses_)
    if (c.size() == 1 && !assign(c[0])) {
      undo(0);
      return;
    }
  search(visit);
  undo(0);
}

bool ClauseSearch::satisfiable() {
  bool found = false;
  enumerate([&](const std::vector<std::int8_t>&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace matchforge::asp::detail
