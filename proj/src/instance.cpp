#include "matchforge/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "matchforge/error.hpp"

namespace matchforge {

std::string to_string(PersonRef x) {
  return (x.side == Side::Man ? "m" : "w") + std::to_string(x.index);
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Classical: return "classical";
    case Variant::Unacceptability: return "unacceptability";
    case Variant::UnacceptabilityAndTies: return "unacceptability+ties";
  }
  return "unknown";
}

namespace {

// Checks one list against the invariants and fills its row of the rank table.
// Returns an error message, empty on success.
std::string check_list(const PreferenceList& list, int range, int* rank_row) {
  if (list.groups.empty()) return "missing neutral group";
  for (std::size_t g = 0; g < list.groups.size(); ++g) {
    const auto& group = list.groups[g];
    if (group.empty() && g + 1 != list.groups.size()) return "empty group before the neutral group";
    for (int k : group) {
      if (k < 1 || k > range) return "index " + std::to_string(k) + " out of range 1.." + std::to_string(range);
      if (rank_row[k] != 0) return "duplicate index " + std::to_string(k);
      rank_row[k] = static_cast<int>(g) + 1;
    }
  }
  return {};
}

void sort_groups(std::vector<PreferenceList>& lists) {
  for (auto& list : lists)
    for (auto& g : list.groups) std::sort(g.begin(), g.end());
}

}  // namespace

Instance::Instance(std::vector<PreferenceList> men, std::vector<PreferenceList> women)
    : men_(std::move(men)), women_(std::move(women)) {
  if (men_.size() > static_cast<std::size_t>(kMaxSideSize) || women_.size() > static_cast<std::size_t>(kMaxSideSize))
    throw InvalidInstance("instance exceeds " + std::to_string(kMaxSideSize) + " persons per side");
  sort_groups(men_);
  sort_groups(women_);
  const int n = this->men();
  const int p = this->women();
  man_rank_.assign(static_cast<std::size_t>(n) * (p + 1), 0);
  woman_rank_.assign(static_cast<std::size_t>(p) * (n + 1), 0);
  for (int i = 0; i < n; ++i) {
    auto err = check_list(men_[i], p, &man_rank_[static_cast<std::size_t>(i) * (p + 1)]);
    if (!err.empty()) throw InvalidInstance("m" + std::to_string(i + 1) + ": " + err);
  }
  for (int j = 0; j < p; ++j) {
    auto err = check_list(women_[j], n, &woman_rank_[static_cast<std::size_t>(j) * (n + 1)]);
    if (!err.empty()) throw InvalidInstance("w" + std::to_string(j + 1) + ": " + err);
  }
}

bool Instance::contains(PersonRef x) const noexcept {
  return x.index >= 1 && x.index <= (x.side == Side::Man ? men() : women());
}

const PreferenceList& Instance::preferences(PersonRef x) const {
  if (!contains(x)) throw DomainError("no such person " + to_string(x));
  return x.side == Side::Man ? men_[x.index - 1] : women_[x.index - 1];
}

int Instance::group_of(PersonRef x, int partner) const {
  if (!contains(x)) throw DomainError("no such person " + to_string(x));
  if (x.side == Side::Man) {
    if (partner < 1 || partner > women()) throw DomainError("no such woman w" + std::to_string(partner));
    return man_rank_[static_cast<std::size_t>(x.index - 1) * (women() + 1) + partner];
  }
  if (partner < 1 || partner > men()) throw DomainError("no such man m" + std::to_string(partner));
  return woman_rank_[static_cast<std::size_t>(x.index - 1) * (men() + 1) + partner];
}

int Instance::self_level(PersonRef x) const {
  return static_cast<int>(preferences(x).groups.size());
}

bool Instance::mutually_acceptable(int man_index, int woman_index) const {
  return acceptable(man(man_index), woman_index) && acceptable(woman(woman_index), man_index);
}

std::vector<int> Instance::ranked_partners(PersonRef x) const {
  std::vector<int> out;
  for (const auto& g : preferences(x).groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

// ---------------------------------------------------------------------------
// SMPI parsing

namespace {

class LineCursor {
 public:
  LineCursor(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && (std::isspace(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == ','))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= line_.size();
  }
  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), value);
    if (ec != std::errc{} || ptr == line_.data() + pos_) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - line_.data());
    return value;
  }
  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < line_.size() && std::isalpha(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no_, column()); }
  [[noreturn]] void fail_at(const std::string& what, int column) const { throw ParseError(what, line_no_, column); }

 private:
  std::string_view line_;
  std::size_t pos_ = 0;
  int line_no_;
};

struct PersonLine {
  PreferenceList list;
  int line_no = 0;
};

}  // namespace

Instance parse_instance(std::string_view text) {
  std::optional<int> n, p;
  std::vector<std::optional<PersonLine>> men_lines, women_lines;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineCursor cur(line, line_no);
    if (cur.done()) {
      if (end == text.size()) break;
      continue;
    }
    const int word_col = cur.column();
    std::string head = cur.word();
    if (head == "men" || head == "women") {
      cur.expect(':');
      const int col = cur.column();
      int count = cur.integer();
      if (!cur.done()) cur.fail("unexpected text after count");
      if (count < 0 || count > kMaxSideSize)
        cur.fail_at("count must lie in 0.." + std::to_string(kMaxSideSize), col);
      auto& slot = head == "men" ? n : p;
      if (slot) cur.fail_at("duplicate '" + head + "' header", word_col);
      slot = count;
      (head == "men" ? men_lines : women_lines).assign(static_cast<std::size_t>(count), std::nullopt);
    } else if (head == "m" || head == "w") {
      if (!n || !p) cur.fail_at("person line before the 'men:' and 'women:' headers", word_col);
      const bool is_man = head == "m";
      const int idx_col = cur.column();
      int idx = cur.integer();
      auto& lines = is_man ? men_lines : women_lines;
      if (idx < 1 || idx > static_cast<int>(lines.size()))
        cur.fail_at("person " + head + std::to_string(idx) + " out of range", idx_col);
      if (lines[idx - 1]) cur.fail_at("duplicate line for " + head + std::to_string(idx), word_col);
      cur.expect(':');

      const int range = is_man ? *p : *n;
      PersonLine pl;
      pl.line_no = line_no;
      std::vector<bool> seen(static_cast<std::size_t>(range) + 1, false);
      while (!cur.done()) {
        const int group_col = cur.column();
        cur.expect('(');
        std::vector<int> group;
        while (!cur.accept(')')) {
          if (cur.done()) cur.fail("unterminated group");
          const int col = cur.column();
          int k = cur.integer();
          if (k < 1 || k > range)
            cur.fail_at("index " + std::to_string(k) + " out of range 1.." + std::to_string(range), col);
          if (seen[k]) cur.fail_at("duplicate index " + std::to_string(k), col);
          seen[k] = true;
          group.push_back(k);
        }
        if (!pl.list.groups.empty() && pl.list.groups.back().empty())
          cur.fail_at("empty group before the neutral group", group_col);
        pl.list.groups.push_back(std::move(group));
      }
      if (pl.list.groups.empty()) cur.fail("missing neutral group");
      lines[idx - 1] = std::move(pl);
    } else {
      cur.fail_at("expected 'men:', 'women:', 'mI:' or 'wJ:'", word_col);
    }
    if (end == text.size()) break;
  }

  if (!n) throw ParseError("missing 'men:' header", line_no, 1);
  if (!p) throw ParseError("missing 'women:' header", line_no, 1);

  auto collect = [&](std::vector<std::optional<PersonLine>>& lines, char tag) {
    std::vector<PreferenceList> out;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (!lines[k]) throw ParseError(std::string("missing line for ") + tag + std::to_string(k + 1), line_no, 1);
      out.push_back(std::move(lines[k]->list));
    }
    return out;
  };
  auto men = collect(men_lines, 'm');
  auto women = collect(women_lines, 'w');
  try {
    return Instance(std::move(men), std::move(women));
  } catch (const InvalidInstance& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "men: " << inst.men() << "\n";
  out << "women: " << inst.women() << "\n";
  auto emit = [&](PersonRef x) {
    out << to_string(x) << ":";
    for (const auto& g : inst.preferences(x).groups) {
      out << " (";
      for (std::size_t k = 0; k < g.size(); ++k) out << (k ? " " : "") << g[k];
      out << ")";
    }
    out << "\n";
  };
  for (int i = 1; i <= inst.men(); ++i) emit(man(i));
  for (int j = 1; j <= inst.women(); ++j) emit(woman(j));
  return out.str();
}

DerivedSets derived_sets(const Instance& inst, PersonRef x) {
  const auto& groups = inst.preferences(x).groups;
  DerivedSets out;
  for (std::size_t g = 0; g + 1 < groups.size(); ++g)
    out.preferred.insert(out.preferred.end(), groups[g].begin(), groups[g].end());
  out.neutral = groups.back();
  out.acceptable = out.preferred;
  out.acceptable.insert(out.acceptable.end(), out.neutral.begin(), out.neutral.end());
  std::sort(out.preferred.begin(), out.preferred.end());
  std::sort(out.acceptable.begin(), out.acceptable.end());
  const int range = x.side == Side::Man ? inst.women() : inst.men();
  for (int k = 1; k <= range; ++k)
    if (!std::binary_search(out.acceptable.begin(), out.acceptable.end(), k)) out.unacceptable.push_back(k);
  return out;
}

bool prefers_strictly(const Instance& inst, PersonRef x, PersonRef a, PersonRef b) {
  auto level = [&](PersonRef y) {
    if (y == x) return inst.self_level(x);
    if (y.side != opposite(x.side))
      throw DomainError(to_string(y) + " is not a candidate partner of " + to_string(x));
    const int g = inst.group_of(x, y.index);
    if (g == 0) throw DomainError(to_string(y) + " is unacceptable to " + to_string(x));
    return g;
  };
  return level(a) < level(b);
}

Variant classify_variant(const Instance& inst) {
  bool strict = true;
  bool complete = inst.men() == inst.women();
  auto scan = [&](PersonRef x, int range) {
    const auto& groups = inst.preferences(x).groups;
    if (!groups.back().empty()) strict = false;
    std::size_t listed = 0;
    for (const auto& g : groups) {
      if (g.size() > 1) strict = false;
      listed += g.size();
    }
    if (listed != static_cast<std::size_t>(range)) complete = false;
  };
  for (int i = 1; i <= inst.men(); ++i) scan(man(i), inst.women());
  for (int j = 1; j <= inst.women(); ++j) scan(woman(j), inst.men());
  if (!strict) return Variant::UnacceptabilityAndTies;
  return complete ? Variant::Classical : Variant::Unacceptability;
}

}  // namespace matchforge
