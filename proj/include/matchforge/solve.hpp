#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "matchforge/instance.hpp"
#include "matchforge/stability.hpp"

namespace matchforge {

enum class Proposer { Men, Women };

/// How ties are broken before running deferred acceptance. Staying single is
/// always placed after every acceptable partner.
struct TieBreakPolicy {
  enum class Kind { AscendingIndex, SeededRandom };
  Kind kind = Kind::AscendingIndex;
  std::uint64_t seed = 0;

  static TieBreakPolicy ascending() { return {}; }
  static TieBreakPolicy seeded(std::uint64_t s) { return {Kind::SeededRandom, s}; }
};

/// Gale-Shapley with unacceptability on the tie-broken instance. The result
/// is weakly stable for the original instance.
Matching deferred_acceptance(const Instance& inst, Proposer proposing, TieBreakPolicy policy = {});

enum class Criterion { SexEq, Weight, Regret, Singles, ManWeight, WomanWeight };
enum class Direction { Minimize, Maximize };

inline constexpr Criterion kAllCriteria[] = {Criterion::SexEq,   Criterion::Weight,    Criterion::Regret,
                                             Criterion::Singles, Criterion::ManWeight, Criterion::WomanWeight};

std::string_view to_string(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view s);

/// Costs of one matching. A person's cost is one plus the number of
/// acceptable partners they strictly prefer to their actual partner.
struct CostReport {
  std::vector<int> man_cost;    // indexed by man - 1
  std::vector<int> woman_cost;  // indexed by woman - 1
  int sexeq = 0;
  int weight = 0;
  int regret = 0;
  int singles = 0;
  int man_weight = 0;
  int woman_weight = 0;

  int of(PersonRef x) const { return x.side == Side::Man ? man_cost.at(x.index - 1) : woman_cost.at(x.index - 1); }
  int value(Criterion c) const;
};

/// Throws DomainError when x's partner is unacceptable to x.
int person_cost(const Instance& inst, const Matching& m, PersonRef x);
int criterion_cost(const Instance& inst, const Matching& m, Criterion c);
CostReport cost_report(const Instance& inst, const Matching& m);
CostReport cost_report(const Instance& inst, const Assignment& a);

/// True when the group-index costs used by the ASP cost rules differ from
/// person_cost for some person and some partner (including staying single).
bool cost_encoding_diverges(const Instance& inst);

/// Enumeration is exponential; inputs with more persons than this are refused.
struct EnumerationLimits {
  int max_persons = 16;
};

struct Optimum {
  int value = 0;
  std::vector<std::size_t> indices;  // into StableSetAnalysis::all_stable
};

struct StableSetAnalysis {
  std::vector<Matching> all_stable;  // canonical order
  std::vector<CostReport> costs;     // parallel to all_stable
  std::map<Criterion, Optimum> optima;  // minima
};

/// All weakly stable matchings. Throws CapExceeded above the limit.
StableSetAnalysis enumerate_stable(const Instance& inst, EnumerationLimits limits = {});

struct OptimizeResult {
  int value = 0;
  std::vector<Matching> witnesses;
};

OptimizeResult optimize(const Instance& inst, Criterion c, Direction d, EnumerationLimits limits = {});

/// Is (m_i, w_j) part of some weakly stable matching?
bool pair_is_stable(const Instance& inst, int man_index, int woman_index, EnumerationLimits limits = {});

enum class CardinalityBound { AtLeastMatched, AtMostMatched };

/// Is there a weakly stable matching with at least (at most) k couples?
bool exists_stable_with_cardinality(const Instance& inst, int k, CardinalityBound bound,
                                    EnumerationLimits limits = {});

/// Is (m_i, w_j) part of some optimal weakly stable matching?
bool pair_is_optimally_stable(const Instance& inst, int man_index, int woman_index, Criterion c, Direction d,
                              EnumerationLimits limits = {});

}  // namespace matchforge
