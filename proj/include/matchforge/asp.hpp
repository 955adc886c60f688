#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "matchforge/error.hpp"

// Ground propositional answer set programming: programs with disjunctive
// heads, positive bodies and negation-as-failure bodies, the Gelfond-Lifschitz
// reduct, model and answer-set checks, Clark completion, and answer-set
// enumeration for tight normal programs.
//
// Strong negation is not modelled. Callers rename "-a" to a fresh atom "na"
// and add whatever consistency rules they need.
namespace matchforge::asp {

struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// "p(a,b)" or "p" for a zero-arity atom.
std::string to_string(const Atom& a);
/// Inverse of to_string. Throws ParseError.
Atom parse_atom(std::string_view text);

using AtomId = std::uint32_t;

/// Interning table; ids are dense and assigned in first-seen order.
class AtomTable {
 public:
  AtomId intern(const Atom& a);
  std::optional<AtomId> find(const Atom& a) const;
  const Atom& at(AtomId id) const { return atoms_.at(id); }
  std::size_t size() const noexcept { return atoms_.size(); }

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, AtomId> index_;
};

/// head_1 v ... v head_k :- positive, not negative.
/// Literal order is kept as given; it carries no meaning.
struct Rule {
  std::vector<AtomId> head;
  std::vector<AtomId> positive;
  std::vector<AtomId> negative;

  bool is_fact() const noexcept { return positive.empty() && negative.empty(); }
  bool is_constraint() const noexcept { return head.empty(); }
  friend bool operator==(const Rule&, const Rule&) = default;
};

enum class ProgramKind { SimpleDisjunctive, Normal, Disjunctive };

class Program {
 public:
  AtomId intern(const Atom& a) { return atoms_.intern(a); }
  /// Interns the atom written as text, e.g. "accept(m1,w2)".
  AtomId intern(std::string_view text) { return atoms_.intern(parse_atom(text)); }
  std::optional<AtomId> find(const Atom& a) const { return atoms_.find(a); }

  void add_rule(Rule r) { rules_.push_back(std::move(r)); }
  /// Convenience: every atom given as text.
  void add_rule(const std::vector<std::string>& head, const std::vector<std::string>& positive,
                const std::vector<std::string>& negative = {});

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const AtomTable& atoms() const noexcept { return atoms_; }
  const Atom& atom(AtomId id) const { return atoms_.at(id); }

  bool is_naf_free() const;
  /// Every head has at most one atom.
  bool is_normal() const;
  /// SimpleDisjunctive when naf-free, else Normal when every head has at most
  /// one atom, else Disjunctive.
  ProgramKind kind() const;

  /// Structural equality: same atoms in the same rule positions.
  friend bool operator==(const Program& a, const Program& b);

 private:
  AtomTable atoms_;
  std::vector<Rule> rules_;
};

/// A set of atoms, compared by value so interpretations can be carried
/// between programs that intern atoms differently.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::initializer_list<Atom> atoms) : atoms_(atoms) {}
  explicit Interpretation(std::set<Atom> atoms) : atoms_(std::move(atoms)) {}
  /// From textual atoms.
  static Interpretation of(const std::vector<std::string>& atoms);

  bool contains(const Atom& a) const { return atoms_.count(a) != 0; }
  void insert(Atom a) { atoms_.insert(std::move(a)); }
  void erase(const Atom& a) { atoms_.erase(a); }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }
  const std::set<Atom>& atoms() const noexcept { return atoms_; }

  friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

 private:
  std::set<Atom> atoms_;
};

/// "{a, b(c,d)}".
std::string to_string(const Interpretation& i);

/// Raised by least_model when a constraint's body holds in the least model.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// Drops every rule whose naf body meets i and strips naf from the rest.
Program reduct(const Program& p, const Interpretation& i);

/// p must be naf-free (std::invalid_argument otherwise).
bool is_model(const Program& p, const Interpretation& i);

/// p must be naf-free and i a model of it (std::invalid_argument otherwise).
/// Searches the subsets of i for a smaller model.
bool is_minimal_model(const Program& p, const Interpretation& i);

bool is_answer_set(const Program& p, const Interpretation& i);

/// Least model of a definite program (naf-free, heads of size <= 1) by
/// forward chaining. Throws ConstraintViolation if a constraint fires.
Interpretation least_model(const Program& p);

/// Conjunction of signed atoms; empty means true.
struct Conjunction {
  std::vector<AtomId> positive;
  std::vector<AtomId> negative;
};

/// atom <-> disjunct_1 v ... v disjunct_k; no disjuncts means atom <-> false.
struct Equivalence {
  AtomId atom = 0;
  std::vector<Conjunction> disjuncts;
};

struct CompletionFormula {
  std::vector<Equivalence> equivalences;  // one per atom of the program, in id order
  std::vector<Conjunction> constraints;   // each must be false
};

/// Clark completion of a normal program (std::invalid_argument otherwise).
CompletionFormula completion(const Program& p);

/// "a <-> b & ~c | d" lines, "false" for empty disjunctions.
std::string format_completion(const Program& p, const CompletionFormula& f);

/// No cycle through positive body literals.
bool is_tight(const Program& p);

struct SearchLimits {
  std::size_t max_atoms = 200;
};

/// Models of the completion of a tight normal program, each re-checked with
/// is_answer_set. Throws CapExceeded above the atom limit and InternalError
/// if a completion model fails the answer-set check. Results are sorted.
std::vector<Interpretation> enumerate_answer_sets_tight(const Program& p, SearchLimits limits = {});

/// DLV-style rule text, one rule per line: "h1 v h2 :- b1, not c1.",
/// facts "h.", constraints ":- b.".
std::string format_rule(const Program& p, const Rule& r);
std::string format_program(const Program& p);
/// Accepts what format_program writes, plus '%' comments. Throws ParseError.
Program parse_program(std::string_view text);

}  // namespace matchforge::asp
