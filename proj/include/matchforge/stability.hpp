#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchforge/instance.hpp"

namespace matchforge {

/// One marriage. A self-pair (x, x) records that x stays single.
struct Pair {
  PersonRef first;
  PersonRef second;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// A set of marriages. Mixed pairs are stored man-first and the pair list is
/// kept sorted, so structurally equal sets compare equal. Construction does
/// not check the pairs against an instance; see validate_matching.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Pair> pairs);

  /// Builds a matching from each man's partner (0 = single); women nobody
  /// chose become single.
  static Matching from_partners(const std::vector<int>& man_partner, int women);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool contains(PersonRef a, PersonRef b) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Pair> pairs_;
};

/// Partner table of a valid matching: value 0 means single.
struct Assignment {
  std::vector<int> man_partner;    // indexed by man - 1
  std::vector<int> woman_partner;  // indexed by woman - 1
};

/// Orders matchings lexicographically by (man 1's partner, ..., man n's
/// partner) with single encoded as women + 1.
bool canonical_less(const Assignment& a, const Assignment& b, int women);

void validate_matching(const Instance& inst, const Matching& m);
/// Validates and converts.
Assignment assignment_of(const Instance& inst, const Matching& m);
Matching to_matching(const Assignment& a);

struct BlockingReport {
  std::vector<std::pair<int, int>> blocking_pairs;  // (man, woman)
  std::vector<PersonRef> blocking_individuals;

  bool empty() const noexcept { return blocking_pairs.empty() && blocking_individuals.empty(); }
  friend bool operator==(const BlockingReport&, const BlockingReport&) = default;
};

/// A current partner who is unacceptable ranks below staying single and below
/// every acceptable candidate.
BlockingReport blocking_report(const Instance& inst, const Assignment& a);
BlockingReport blocking_report(const Instance& inst, const Matching& m);

bool is_weakly_stable(const Instance& inst, const Assignment& a);
bool is_weakly_stable(const Instance& inst, const Matching& m);

/// Line form: "m1 w4", singles as "m2 -" / "w2 -".
std::string format_matching(const Matching& m);
Matching parse_matching(std::string_view text);

}  // namespace matchforge
