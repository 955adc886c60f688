#include <algorithm>
#include <functional>
#include <stdexcept>

#include "clause_search.hpp"
#include "matchforge/asp.hpp"

namespace matchforge::asp {

namespace {

// Fresh program sharing p's atom ids.
Program same_atoms(const Program& p) {
  Program out;
  for (AtomId id = 0; id < p.atoms().size(); ++id) out.intern(p.atom(id));
  return out;
}

std::vector<bool> membership(const Program& p, const Interpretation& i) {
  std::vector<bool> in(p.atoms().size(), false);
  for (AtomId id = 0; id < p.atoms().size(); ++id) in[id] = i.contains(p.atom(id));
  return in;
}

bool all_in(const std::vector<AtomId>& atoms, const std::vector<bool>& in) {
  return std::all_of(atoms.begin(), atoms.end(), [&](AtomId a) { return in[a]; });
}

bool any_in(const std::vector<AtomId>& atoms, const std::vector<bool>& in) {
  return std::any_of(atoms.begin(), atoms.end(), [&](AtomId a) { return in[a]; });
}

// Atoms of i the program never mentions.
bool has_foreign_atoms(const Program& p, const Interpretation& i) {
  return std::any_of(i.begin(), i.end(), [&](const Atom& a) { return !p.find(a); });
}

void require_naf_free(const Program& p, const char* what) {
  if (!p.is_naf_free()) throw std::invalid_argument(std::string(what) + ": program is not naf-free");
}

}  // namespace

Program reduct(const Program& p, const Interpretation& i) {
  Program out = same_atoms(p);
  const auto in = membership(p, i);
  for (const auto& r : p.rules()) {
    if (any_in(r.negative, in)) continue;
    out.add_rule(Rule{r.head, r.positive, {}});
  }
  return out;
}

bool is_model(const Program& p, const Interpretation& i) {
  require_naf_free(p, "is_model");
  const auto in = membership(p, i);
  for (const auto& r : p.rules())
    if (all_in(r.positive, in) && !any_in(r.head, in)) return false;
  return true;
}

// A strictly smaller model exists iff this CNF over the atoms of i is
// satisfiable: every rule applicable inside i stays satisfied and at least one
// atom of i is dropped.
bool is_minimal_model(const Program& p, const Interpretation& i) {
  require_naf_free(p, "is_minimal_model");
  if (!is_model(p, i)) throw std::invalid_argument("is_minimal_model: interpretation is not a model");
  if (has_foreign_atoms(p, i)) return false;
  if (i.empty()) return true;

  std::vector<int> var(p.atoms().size(), 0);
  detail::ClauseSearch cnf;
  for (AtomId id = 0; id < p.atoms().size(); ++id)
    if (i.contains(p.atom(id))) var[id] = cnf.add_var();

  for (const auto& r : p.rules()) {
    std::vector<int> clause;
    bool applicable = true;
    for (AtomId b : r.positive) {
      if (var[b] == 0) {
        applicable = false;
        break;
      }
      clause.push_back(-var[b]);
    }
    if (!applicable) continue;
    for (AtomId h : r.head)
      if (var[h] != 0) clause.push_back(var[h]);
    cnf.add_clause(std::move(clause));
  }
  std::vector<int> drop_one;
  for (int v = 1; v <= cnf.vars(); ++v) drop_one.push_back(-v);
  cnf.add_clause(std::move(drop_one));
  return !cnf.satisfiable();
}

bool is_answer_set(const Program& p, const Interpretation& i) {
  if (has_foreign_atoms(p, i)) return false;
  const Program r = reduct(p, i);
  return is_model(r, i) && is_minimal_model(r, i);
}

Interpretation least_model(const Program& p) {
  require_naf_free(p, "least_model");
  if (!p.is_normal()) throw std::invalid_argument("least_model: program has a disjunctive head");

  const std::size_t n = p.atoms().size();
  std::vector<bool> in(n, false);
  std::vector<std::size_t> missing(p.rules().size());
  std::vector<std::vector<std::size_t>> watchers(n);
  std::vector<AtomId> queue;

  auto fire = [&](std::size_t k) {
    const Rule& r = p.rules()[k];
    if (r.head.empty()) throw ConstraintViolation("constraint violated: " + format_rule(p, r));
    const AtomId h = r.head[0];
    if (!in[h]) {
      in[h] = true;
      queue.push_back(h);
    }
  };

  for (std::size_t k = 0; k < p.rules().size(); ++k) {
    const Rule& r = p.rules()[k];
    std::vector<AtomId> body = r.positive;
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    missing[k] = body.size();
    for (AtomId b : body) watchers[b].push_back(k);
  }
  for (std::size_t k = 0; k < p.rules().size(); ++k)
    if (missing[k] == 0) fire(k);
  while (!queue.empty()) {
    const AtomId a = queue.back();
    queue.pop_back();
    for (std::size_t k : watchers[a])
      if (--missing[k] == 0) fire(k);
  }

  Interpretation out;
  for (AtomId id = 0; id < n; ++id)
    if (in[id]) out.insert(p.atom(id));
  return out;
}

// ---------------------------------------------------------------------------
// Completion

CompletionFormula completion(const Program& p) {
  if (!p.is_normal()) throw std::invalid_argument("completion: program is not normal");
  CompletionFormula f;
  f.equivalences.resize(p.atoms().size());
  for (AtomId id = 0; id < p.atoms().size(); ++id) f.equivalences[id].atom = id;
  for (const auto& r : p.rules()) {
    Conjunction body{r.positive, r.negative};
    if (r.head.empty())
      f.constraints.push_back(std::move(body));
    else
      f.equivalences[r.head[0]].disjuncts.push_back(std::move(body));
  }
  return f;
}

namespace {

std::string format_conjunction(const Program& p, const Conjunction& c) {
  if (c.positive.empty() && c.negative.empty()) return "true";
  std::string out;
  for (AtomId a : c.positive) out += (out.empty() ? "" : " & ") + to_string(p.atom(a));
  for (AtomId a : c.negative) out += (out.empty() ? "~" : " & ~") + to_string(p.atom(a));
  return out;
}

}  // namespace

std::string format_completion(const Program& p, const CompletionFormula& f) {
  std::string out;
  for (const auto& e : f.equivalences) {
    out += to_string(p.atom(e.atom)) + " <-> ";
    if (e.disjuncts.empty()) out += "false";
    for (std::size_t k = 0; k < e.disjuncts.size(); ++k) {
      if (k) out += " | ";
      out += format_conjunction(p, e.disjuncts[k]);
    }
    out += "\n";
  }
  for (const auto& c : f.constraints) out += "~(" + format_conjunction(p, c) + ")\n";
  return out;
}

bool is_tight(const Program& p) {
  const std::size_t n = p.atoms().size();
  std::vector<std::vector<AtomId>> edges(n);
  for (const auto& r : p.rules())
    for (AtomId h : r.head)
      for (AtomId b : r.positive) edges[h].push_back(b);

  // 0 unvisited, 1 on stack, 2 done.
  std::vector<int> state(n, 0);
  std::function<bool(AtomId)> acyclic = [&](AtomId a) {
    state[a] = 1;
    for (AtomId b : edges[a]) {
      if (state[b] == 1) return false;
      if (state[b] == 0 && !acyclic(b)) return false;
    }
    state[a] = 2;
    return true;
  };
  for (AtomId a = 0; a < n; ++a)
    if (state[a] == 0 && !acyclic(a)) return false;
  return true;
}

std::vector<Interpretation> enumerate_answer_sets_tight(const Program& p, SearchLimits limits) {
  if (!p.is_normal()) throw std::invalid_argument("enumerate_answer_sets_tight: program is not normal");
  const std::size_t n = p.atoms().size();
  if (n > limits.max_atoms)
    throw CapExceeded("program has " + std::to_string(n) + " atoms; search cap is " + std::to_string(limits.max_atoms));

  const CompletionFormula f = completion(p);
  detail::ClauseSearch cnf(static_cast<int>(n));
  auto var = [](AtomId a) { return static_cast<int>(a) + 1; };
  auto literals = [&](const Conjunction& c) {
    std::vector<int> lits;
    for (AtomId a : c.positive) lits.push_back(var(a));
    for (AtomId a : c.negative) lits.push_back(-var(a));
    return lits;
  };

  for (const auto& e : f.equivalences) {
    const int a = var(e.atom);
    std::vector<int> some_body{-a};
    bool always = false;
    for (const auto& d : e.disjuncts) {
      const auto lits = literals(d);
      if (lits.empty()) {
        always = true;
        break;
      }
      int body = lits[0];
      if (lits.size() > 1) {
        body = cnf.add_var();
        std::vector<int> back{body};
        for (int l : lits) {
          cnf.add_clause({-body, l});
          back.push_back(-l);
        }
        cnf.add_clause(std::move(back));
      }
      cnf.add_clause({-body, a});
      some_body.push_back(body);
    }
    if (always)
      cnf.add_clause({a});
    else
      cnf.add_clause(std::move(some_body));
  }
  for (const auto& c : f.constraints) {
    auto lits = literals(c);
    for (int& l : lits) l = -l;
    cnf.add_clause(std::move(lits));
  }

  std::vector<int> decision;
  for (AtomId a = 0; a < n; ++a) decision.push_back(var(a));
  cnf.set_decision_vars(std::move(decision));

  std::vector<Interpretation> out;
  cnf.enumerate([&](const std::vector<std::int8_t>& value) {
    Interpretation i;
    for (AtomId a = 0; a < n; ++a)
      if (value[var(a)] == 1) i.insert(p.atom(a));
    if (!is_answer_set(p, i)) throw InternalError("completion model is not an answer set: " + to_string(i));
    out.push_back(std::move(i));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matchforge::asp
