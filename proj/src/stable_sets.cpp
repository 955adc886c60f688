#include <algorithm>
#include <climits>
#include <cstdlib>

#include "matchforge/error.hpp"
#include "matchforge/solve.hpp"

namespace matchforge {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::SexEq: return "sexeq";
    case Criterion::Weight: return "weight";
    case Criterion::Regret: return "regret";
    case Criterion::Singles: return "singles";
    case Criterion::ManWeight: return "manweight";
    case Criterion::WomanWeight: return "womanweight";
  }
  return "unknown";
}

std::optional<Criterion> parse_criterion(std::string_view s) {
  for (Criterion c : kAllCriteria)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

int CostReport::value(Criterion c) const {
  switch (c) {
    case Criterion::SexEq: return sexeq;
    case Criterion::Weight: return weight;
    case Criterion::Regret: return regret;
    case Criterion::Singles: return singles;
    case Criterion::ManWeight: return man_weight;
    case Criterion::WomanWeight: return woman_weight;
  }
  return 0;
}

namespace {

// 1 + number of acceptable partners in groups before `group`.
int cost_at_group(const Instance& inst, PersonRef x, int group) {
  const auto& groups = inst.preferences(x).groups;
  int better = 0;
  for (int g = 1; g < group; ++g) better += static_cast<int>(groups[g - 1].size());
  return better + 1;
}

int cost_of_partner(const Instance& inst, PersonRef x, int partner) {
  if (partner == 0) return cost_at_group(inst, x, inst.self_level(x));
  const int g = inst.group_of(x, partner);
  if (g == 0)
    throw DomainError("cost undefined: " + to_string(PersonRef{opposite(x.side), partner}) + " is unacceptable to " +
                      to_string(x));
  return cost_at_group(inst, x, g);
}

}  // namespace

CostReport cost_report(const Instance& inst, const Assignment& a) {
  CostReport r;
  for (int i = 1; i <= inst.men(); ++i) {
    r.man_cost.push_back(cost_of_partner(inst, man(i), a.man_partner[i - 1]));
    if (a.man_partner[i - 1] == 0) ++r.singles;
  }
  for (int j = 1; j <= inst.women(); ++j) {
    r.woman_cost.push_back(cost_of_partner(inst, woman(j), a.woman_partner[j - 1]));
    if (a.woman_partner[j - 1] == 0) ++r.singles;
  }
  for (int c : r.man_cost) r.man_weight += c;
  for (int c : r.woman_cost) r.woman_weight += c;
  r.weight = r.man_weight + r.woman_weight;
  r.sexeq = std::abs(r.man_weight - r.woman_weight);
  for (int c : r.man_cost) r.regret = std::max(r.regret, c);
  for (int c : r.woman_cost) r.regret = std::max(r.regret, c);
  return r;
}

CostReport cost_report(const Instance& inst, const Matching& m) { return cost_report(inst, assignment_of(inst, m)); }

int person_cost(const Instance& inst, const Matching& m, PersonRef x) {
  const Assignment a = assignment_of(inst, m);
  if (!inst.contains(x)) throw DomainError("no such person " + to_string(x));
  const int partner = x.side == Side::Man ? a.man_partner[x.index - 1] : a.woman_partner[x.index - 1];
  return cost_of_partner(inst, x, partner);
}

int criterion_cost(const Instance& inst, const Matching& m, Criterion c) { return cost_report(inst, m).value(c); }

bool cost_encoding_diverges(const Instance& inst) {
  auto diverges = [&](PersonRef x) {
    for (int g = 1; g <= inst.self_level(x); ++g)
      if (cost_at_group(inst, x, g) != g) return true;
    return false;
  };
  for (int i = 1; i <= inst.men(); ++i)
    if (diverges(man(i))) return true;
  for (int j = 1; j <= inst.women(); ++j)
    if (diverges(woman(j))) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration: men in index order pick an acceptable, still free woman or
// stay single. A branch is cut as soon as two decided persons block it.

namespace {

class StableEnumerator {
 public:
  explicit StableEnumerator(const Instance& inst)
      : inst_(inst),
        man_partner_(inst.men(), 0),
        woman_partner_(inst.women(), 0),
        man_level_(inst.men(), 0),
        woman_level_(inst.women(), 0) {
    for (int j = 1; j <= inst.women(); ++j) woman_level_[j - 1] = inst.self_level(woman(j));
  }

  std::vector<Assignment> run() {
    descend(1);
    return std::move(found_);
  }

 private:
  bool blocks(int i, int j) const {
    if (man_partner_[i - 1] == j) return false;
    const int gm = inst_.group_of(man(i), j);
    if (gm == 0 || gm >= man_level_[i - 1]) return false;
    const int gw = inst_.group_of(woman(j), i);
    return gw != 0 && gw < woman_level_[j - 1];
  }

  // Man i has just been decided; check every pair whose two sides are now known.
  bool consistent(int i) const {
    for (int j = 1; j <= inst_.women(); ++j)
      if (woman_partner_[j - 1] != 0 && blocks(i, j)) return false;
    const int w = man_partner_[i - 1];
    if (w != 0)
      for (int k = 1; k < i; ++k)
        if (blocks(k, w)) return false;
    return true;
  }

  void descend(int i) {
    if (i > inst_.men()) {
      Assignment a{man_partner_, woman_partner_};
      if (is_weakly_stable(inst_, a)) found_.push_back(std::move(a));
      return;
    }
    for (int j = 1; j <= inst_.women(); ++j) {
      if (woman_partner_[j - 1] != 0 || !inst_.mutually_acceptable(i, j)) continue;
      man_partner_[i - 1] = j;
      woman_partner_[j - 1] = i;
      man_level_[i - 1] = inst_.group_of(man(i), j);
      woman_level_[j - 1] = inst_.group_of(woman(j), i);
      if (consistent(i)) descend(i + 1);
      woman_level_[j - 1] = inst_.self_level(woman(j));
      woman_partner_[j - 1] = 0;
    }
    man_partner_[i - 1] = 0;
    man_level_[i - 1] = inst_.self_level(man(i));
    if (consistent(i)) descend(i + 1);
  }

  const Instance& inst_;
  std::vector<int> man_partner_;
  std::vector<int> woman_partner_;
  std::vector<int> man_level_;
  std::vector<int> woman_level_;
  std::vector<Assignment> found_;
};

void check_cap(const Instance& inst, const EnumerationLimits& limits) {
  if (inst.persons() > limits.max_persons)
    throw CapExceeded("instance has " + std::to_string(inst.persons()) + " persons; enumeration cap is " +
                      std::to_string(limits.max_persons));
}

void check_pair(const Instance& inst, int i, int j) {
  if (!inst.contains(man(i))) throw DomainError("no such man m" + std::to_string(i));
  if (!inst.contains(woman(j))) throw DomainError("no such woman w" + std::to_string(j));
}

}  // namespace

StableSetAnalysis enumerate_stable(const Instance& inst, EnumerationLimits limits) {
  check_cap(inst, limits);
  StableSetAnalysis out;
  for (auto& a : StableEnumerator(inst).run()) {
    out.costs.push_back(cost_report(inst, a));
    out.all_stable.push_back(to_matching(a));
  }
  if (out.all_stable.empty()) throw InternalError("no weakly stable matching found");
  for (Criterion c : kAllCriteria) {
    Optimum opt{INT_MAX, {}};
    for (std::size_t k = 0; k < out.costs.size(); ++k) {
      const int v = out.costs[k].value(c);
      if (v < opt.value) opt = {v, {}};
      if (v == opt.value) opt.indices.push_back(k);
    }
    out.optima[c] = std::move(opt);
  }
  return out;
}

OptimizeResult optimize(const Instance& inst, Criterion c, Direction d, EnumerationLimits limits) {
  const StableSetAnalysis analysis = enumerate_stable(inst, limits);
  OptimizeResult out;
  out.value = d == Direction::Minimize ? INT_MAX : INT_MIN;
  for (std::size_t k = 0; k < analysis.costs.size(); ++k) {
    const int v = analysis.costs[k].value(c);
    const bool better = d == Direction::Minimize ? v < out.value : v > out.value;
    if (better) {
      out.value = v;
      out.witnesses.clear();
    }
    if (v == out.value) out.witnesses.push_back(analysis.all_stable[k]);
  }
  if (out.witnesses.empty()) throw InternalError("optimization found no stable matching");
  return out;
}

bool pair_is_stable(const Instance& inst, int i, int j, EnumerationLimits limits) {
  check_pair(inst, i, j);
  const auto analysis = enumerate_stable(inst, limits);
  return std::any_of(analysis.all_stable.begin(), analysis.all_stable.end(),
                     [&](const Matching& m) { return m.contains(man(i), woman(j)); });
}

bool exists_stable_with_cardinality(const Instance& inst, int k, CardinalityBound bound, EnumerationLimits limits) {
  if (k < 0) throw DomainError("cardinality must be non-negative");
  const int threshold = inst.persons() - 2 * k;
  const auto analysis = enumerate_stable(inst, limits);
  return std::any_of(analysis.costs.begin(), analysis.costs.end(), [&](const CostReport& r) {
    return bound == CardinalityBound::AtLeastMatched ? r.singles <= threshold : r.singles >= threshold;
  });
}

bool pair_is_optimally_stable(const Instance& inst, int i, int j, Criterion c, Direction d,
                              EnumerationLimits limits) {
  check_pair(inst, i, j);
  const auto result = optimize(inst, c, d, limits);
  return std::any_of(result.witnesses.begin(), result.witnesses.end(),
                     [&](const Matching& m) { return m.contains(man(i), woman(j)); });
}

}  // namespace matchforge
