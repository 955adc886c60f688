#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace matchforge {

enum class Side : std::uint8_t { Man, Woman };

constexpr Side opposite(Side s) noexcept { return s == Side::Man ? Side::Woman : Side::Man; }

/// A person of an instance. Indices are 1-based on both sides.
struct PersonRef {
  Side side = Side::Man;
  int index = 1;

  friend auto operator<=>(const PersonRef&, const PersonRef&) = default;
};

constexpr PersonRef man(int i) noexcept { return {Side::Man, i}; }
constexpr PersonRef woman(int j) noexcept { return {Side::Woman, j}; }

/// "m3" / "w2".
std::string to_string(PersonRef x);

/// Ordered groups of equally preferred partners. The last group is the
/// neutral group: its members tie with staying single. Only it may be empty.
struct PreferenceList {
  std::vector<std::vector<int>> groups;

  friend bool operator==(const PreferenceList&, const PreferenceList&) = default;
};

struct DerivedSets {
  std::vector<int> preferred;
  std::vector<int> neutral;
  std::vector<int> acceptable;
  std::vector<int> unacceptable;
};

enum class Variant { Classical, Unacceptability, UnacceptabilityAndTies };

std::string_view to_string(Variant v);

/// Upper bound on men and on women accepted by the parser and the constructor.
inline constexpr int kMaxSideSize = 64;

/// An SMP instance with unacceptability and ties. Immutable once built.
///
/// Groups are stored with their members sorted ascending; rank tables are
/// precomputed so that group lookups are O(1).
class Instance {
 public:
  /// Throws InvalidInstance when a list breaks the disjointness, range or
  /// empty-group rules, or a side exceeds kMaxSideSize.
  Instance(std::vector<PreferenceList> men, std::vector<PreferenceList> women);

  int men() const noexcept { return static_cast<int>(men_.size()); }
  int women() const noexcept { return static_cast<int>(women_.size()); }
  int persons() const noexcept { return men() + women(); }

  bool contains(PersonRef x) const noexcept;
  const PreferenceList& preferences(PersonRef x) const;

  /// 1-based group holding `partner` in x's list, 0 when unacceptable.
  int group_of(PersonRef x, int partner) const;
  /// Position of the neutral group; staying single sits at this level.
  int self_level(PersonRef x) const;
  bool acceptable(PersonRef x, int partner) const { return group_of(x, partner) != 0; }
  bool mutually_acceptable(int man_index, int woman_index) const;

  /// Acceptable partners ordered by group, ascending index within a group.
  std::vector<int> ranked_partners(PersonRef x) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.men_ == b.men_ && a.women_ == b.women_;
  }

 private:
  std::vector<PreferenceList> men_;
  std::vector<PreferenceList> women_;
  std::vector<int> man_rank_;    // men() x (women()+1), column 0 unused
  std::vector<int> woman_rank_;  // women() x (men()+1)
};

/// Parses SMPI text. Throws ParseError (with position) on syntax errors and on
/// list-invariant violations.
Instance parse_instance(std::string_view text);

/// Canonical SMPI text; parse_instance(serialize_instance(i)) == i.
std::string serialize_instance(const Instance& inst);

DerivedSets derived_sets(const Instance& inst, PersonRef x);

/// True iff x strictly prefers a to b. Either argument may be x itself,
/// meaning "single". Throws DomainError when a or b is not x and not an
/// acceptable partner of x.
bool prefers_strictly(const Instance& inst, PersonRef x, PersonRef a, PersonRef b);

Variant classify_variant(const Instance& inst);

}  // namespace matchforge
