// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "golden.hpp"
#include "matchforge/encode.hpp"
#include "matchforge/generate.hpp"
#include "matchforge/solve.hpp"
#include "oracles.hpp"
#include "random_programs.hpp"

using namespace matchforge;
using asp::Interpretation;

namespace {

const std::string kData = MATCHFORGE_TEST_DATA;

Instance example(int k) {
  return parse_instance(oracle::read_file(kData + "/data/example" + std::to_string(k) + ".smpi"));
}

const Matching kS1 = parse_matching("m1 w3\nm2 w1\nw2 -\n");
const Matching kS2 = parse_matching("m1 w2\nm2 w1\nw3 -\n");
const Matching kS3 = parse_matching("m1 w1\nm2 -\nw2 -\nw3 -\n");

std::vector<Matching> sorted(std::vector<Matching> v) {
  std::sort(v.begin(), v.end(), [](const Matching& a, const Matching& b) { return a.pairs() < b.pairs(); });
  return v;
}

// Returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

struct AcceptanceCheck {
  int id;
  std::string name;
  double budget_seconds;  // 0 = no time limit
  Check check;
};

// The shared random corpus for the bijection and counterpart checks.
std::vector<Instance> small_corpus() {
  std::mt19937_64 rng(2024);
  std::vector<Instance> out;
  const double densities[] = {0.0, 0.25, 0.5, 0.75};
  for (int k = 0; k < 600; ++k) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int p = 1 + static_cast<int>(rng() % 4);
    out.push_back(random_instance(n, p, densities[rng() % 4], densities[rng() % 4], rng()));
  }
  return out;
}

std::string example1() {
  const Instance inst = example(1);
  const Matching expected = parse_matching("m1 w4\nm2 w3\nm3 w1\nw2 -\n");
  if (deferred_acceptance(inst, Proposer::Men) != expected) return "solve differs";
  const auto all = enumerate_stable(inst).all_stable;
  if (all != std::vector<Matching>{expected}) return std::to_string(all.size()) + " matchings enumerated";
  return {};
}

std::string example3() {
  const Instance inst = example(3);
  if (sorted(enumerate_stable(inst).all_stable) != sorted({kS1, kS2, kS3})) return "enumeration differs";
  std::vector<Interpretation> accepts;
  for (const auto& s : asp::enumerate_answer_sets_tight(encode::encode_normal(inst))) {
    Interpretation a;
    for (const auto& atom : s)
      if (atom.predicate == "accept") a.insert(atom);
    accepts.push_back(a);
  }
  std::vector<Interpretation> expected = {
      Interpretation::of({"accept(m1,w3)", "accept(m2,w1)", "accept(w2,w2)"}),
      Interpretation::of({"accept(m1,w2)", "accept(m2,w1)", "accept(w3,w3)"}),
      Interpretation::of({"accept(m1,w1)", "accept(m2,m2)", "accept(w2,w2)", "accept(w3,w3)"})};
  std::sort(accepts.begin(), accepts.end());
  std::sort(expected.begin(), expected.end());
  if (accepts != expected) return "answer sets differ";
  return {};
}

std::string regret() {
  const Instance inst = example(3);
  const int costs[] = {criterion_cost(inst, kS1, Criterion::Regret), criterion_cost(inst, kS2, Criterion::Regret),
                       criterion_cost(inst, kS3, Criterion::Regret)};
  if (costs[0] != 2 || costs[1] != 3 || costs[2] != 3)
    return "costs " + std::to_string(costs[0]) + "," + std::to_string(costs[1]) + "," + std::to_string(costs[2]);
  const auto r = optimize(inst, Criterion::Regret, Direction::Minimize);
  if (r.value != 2 || r.witnesses != std::vector<Matching>{kS1}) return "optimum differs";
  return {};
}

std::string bijection(const std::vector<Instance>& corpus) {
  int mismatches = 0;
  for (const Instance& inst : corpus) {
    std::vector<Matching> decoded;
    for (const auto& s : asp::enumerate_answer_sets_tight(encode::encode_normal(inst)))
      decoded.push_back(encode::decode_answer(inst, s).matching);
    const auto native = enumerate_stable(inst).all_stable;
    if (decoded.size() != native.size() || sorted(decoded) != sorted(native)) ++mismatches;
  }
  if (mismatches) return std::to_string(mismatches) + " of " + std::to_string(corpus.size()) + " instances differ";
  return {};
}

std::string counterparts(const std::vector<Instance>& corpus) {
  int failures = 0, checked = 0;
  for (const Instance& inst : corpus) {
    const auto disj = encode::encode_disjunctive(inst);
    for (const auto& s : asp::enumerate_answer_sets_tight(encode::encode_normal(inst))) {
      ++checked;
      if (!asp::is_answer_set(disj, encode::disjunctive_counterpart(inst, s))) ++failures;
    }
  }
  if (failures) return std::to_string(failures) + " of " + std::to_string(checked) + " counterparts rejected";
  return {};
}

std::string tight_programs() {
  std::mt19937_64 rng(77);
  int mismatches = 0;
  const int total = 250;
  for (int k = 0; k < total; ++k) {
    const int atoms = 1 + static_cast<int>(rng() % 15);
    const auto p = oracle::random_tight_program(atoms, 1 + static_cast<int>(rng() % 20), rng);
    if (asp::enumerate_answer_sets_tight(p) != oracle::brute_force_answer_sets(p)) ++mismatches;
  }
  if (mismatches) return std::to_string(mismatches) + " of " + std::to_string(total) + " programs differ";
  return {};
}

std::string deferred_acceptance_properties() {
  std::mt19937_64 rng(31);
  int violations = 0;
  const int total = 600;
  for (int k = 0; k < total; ++k) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int p = 1 + static_cast<int>(rng() % 6);
    const Instance inst = random_instance(n, p, 0.0, (rng() % 5) / 5.0, rng());
    const Matching da = deferred_acceptance(inst, Proposer::Men);
    const auto analysis = enumerate_stable(inst);
    bool ok = is_weakly_stable(inst, da) &&
              std::find(analysis.all_stable.begin(), analysis.all_stable.end(), da) != analysis.all_stable.end();
    const oracle::Costs mine = oracle::costs(inst, oracle::partners_of(inst, da));
    for (const auto& m : analysis.all_stable) {
      const oracle::Costs other = oracle::costs(inst, oracle::partners_of(inst, m));
      for (int i = 0; i < n; ++i) ok = ok && mine.man[i] <= other.man[i];
      ok = ok && other.singles == mine.singles;
    }
    if (!ok) ++violations;
  }
  if (violations) return std::to_string(violations) + " of " + std::to_string(total) + " instances violate";
  return {};
}

std::string golden() {
  const Instance inst = example(3);
  const std::string normal = oracle::normalize_rules(asp::format_program(encode::encode_normal(inst)));
  if (normal != oracle::normalize_rules(oracle::read_file(kData + "/golden/example3_normal.lp")))
    return "normal program differs";
  const std::string opt =
      oracle::normalize_rules(encode::encode_optimization(inst, Criterion::Regret, Direction::Minimize));
  if (opt != oracle::normalize_rules(oracle::read_file(kData + "/golden/example3_regret_min.lp")))
    return "minimum-regret program differs";
  return {};
}

std::string witness_costs() {
  std::mt19937_64 rng(55);
  int violations = 0, witnesses = 0;
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int p = 1 + static_cast<int>(rng() % 4);
    const Instance inst = random_instance(n, p, (rng() % 4) / 4.0, (rng() % 4) / 4.0, rng());
    const auto all = oracle::all_stable(inst);
    int idx = 0;
    for (Criterion c : kAllCriteria) {
      for (Direction d : {Direction::Minimize, Direction::Maximize}) {
        const auto r = optimize(inst, c, d);
        int best = oracle::cost_value(oracle::costs(inst, all.front()), idx);
        std::size_t count = 0;
        for (const auto& mp : all) {
          const int v = oracle::cost_value(oracle::costs(inst, mp), idx);
          best = d == Direction::Minimize ? std::min(best, v) : std::max(best, v);
        }
        for (const auto& mp : all) count += oracle::cost_value(oracle::costs(inst, mp), idx) == best;
        if (r.value != best || r.witnesses.size() != count) ++violations;
        for (const auto& m : r.witnesses) {
          ++witnesses;
          const auto mp = oracle::partners_of(inst, m);
          if (!oracle::stable(inst, mp) || oracle::cost_value(oracle::costs(inst, mp), idx) != best) ++violations;
        }
      }
      ++idx;
    }
  }
  if (violations) return std::to_string(violations) + " violations over " + std::to_string(witnesses) + " witnesses";
  return {};
}

}  // namespace

int main() {
  std::vector<Instance> corpus;
  const std::vector<AcceptanceCheck> criteria = {
      {1, "example 1 has exactly one stable matching", 1.0, example1},
      {2, "example 3 matchings and answer sets", 1.0, example3},
      {3, "example 3 minimum regret", 1.0, regret},
      {4, "answer sets decode to the stable matchings (600 instances)", 60.0,
       [&] {
         corpus = small_corpus();
         return bijection(corpus);
       }},
      {5, "counterparts are answer sets of the disjunctive program", 0.0,
       [&] {
         if (corpus.empty()) corpus = small_corpus();
         return counterparts(corpus);
       }},
      {6, "tight completion models equal brute-force answer sets (250 programs)", 0.0, tight_programs},
      {7, "deferred acceptance properties without ties (600 instances)", 0.0, deferred_acceptance_properties},
      {8, "golden encodings of example 3", 0.0, golden},
      {9, "optimize witnesses match recomputed costs (300 instances)", 0.0, witness_costs},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string problem;
    const auto start = std::chrono::steady_clock::now();
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.budget_seconds > 0 && seconds > c.budget_seconds)
      problem = "over the time budget";
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", problem.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                problem.empty() ? "" : ": ", problem.c_str());
    failed += !problem.empty();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
