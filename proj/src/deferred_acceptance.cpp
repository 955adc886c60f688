#include <climits>
#include <deque>
#include <random>

#include "matchforge/solve.hpp"

namespace matchforge {

namespace {

using StrictLists = std::vector<std::vector<int>>;

// Flattens every list of one side into a strict order over acceptable partners.
StrictLists break_ties(const Instance& inst, Side side, TieBreakPolicy policy, std::mt19937_64& rng) {
  const int count = side == Side::Man ? inst.men() : inst.women();
  StrictLists out(count);
  for (int k = 1; k <= count; ++k) {
    for (auto group : inst.preferences({side, k}).groups) {
      if (policy.kind == TieBreakPolicy::Kind::SeededRandom) {
        // Fisher-Yates driven by the raw engine output, so the order only
        // depends on the seed and not on the standard library.
        for (std::size_t i = group.size(); i > 1; --i) std::swap(group[i - 1], group[rng() % i]);
      }
      out[k - 1].insert(out[k - 1].end(), group.begin(), group.end());
    }
  }
  return out;
}

// Returns each proposer's final partner (0 = single).
std::vector<int> propose(const StrictLists& proposers, const StrictLists& receivers) {
  const std::size_t receiver_count = receivers.size();
  // rank[r][q]: position of proposer q in receiver r's list; INT_MAX if unacceptable.
  std::vector<std::vector<int>> rank(receiver_count, std::vector<int>(proposers.size() + 1, INT_MAX));
  for (std::size_t r = 0; r < receiver_count; ++r)
    for (std::size_t pos = 0; pos < receivers[r].size(); ++pos) rank[r][receivers[r][pos]] = static_cast<int>(pos);

  std::vector<int> held(receiver_count, 0);
  std::vector<std::size_t> next(proposers.size(), 0);
  std::vector<int> partner(proposers.size(), 0);
  std::deque<int> free;
  for (std::size_t q = 1; q <= proposers.size(); ++q) free.push_back(static_cast<int>(q));

  while (!free.empty()) {
    const int q = free.front();
    free.pop_front();
    const auto& list = proposers[q - 1];
    while (next[q - 1] < list.size()) {
      const int r = list[next[q - 1]++];
      const auto& rr = rank[r - 1];
      if (rr[q] == INT_MAX) continue;
      const int current = held[r - 1];
      if (current != 0 && rr[current] < rr[q]) continue;
      if (current != 0) {
        partner[current - 1] = 0;
        free.push_back(current);
      }
      held[r - 1] = q;
      partner[q - 1] = r;
      break;
    }
  }
  return partner;
}

}  // namespace

Matching deferred_acceptance(const Instance& inst, Proposer proposing, TieBreakPolicy policy) {
  std::mt19937_64 rng(policy.seed);
  StrictLists men = break_ties(inst, Side::Man, policy, rng);
  StrictLists women = break_ties(inst, Side::Woman, policy, rng);

  if (proposing == Proposer::Men) return Matching::from_partners(propose(men, women), inst.women());

  std::vector<int> woman_partner = propose(women, men);
  std::vector<int> man_partner(inst.men(), 0);
  for (std::size_t j = 0; j < woman_partner.size(); ++j)
    if (woman_partner[j] != 0) man_partner[woman_partner[j] - 1] = static_cast<int>(j) + 1;
  return Matching::from_partners(man_partner, inst.women());
}

}  // namespace matchforge
