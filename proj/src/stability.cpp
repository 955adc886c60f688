#include "matchforge/stability.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <sstream>

#include "matchforge/error.hpp"

namespace matchforge {

Matching::Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  for (auto& pr : pairs_)
    if (pr.first.side == Side::Woman && pr.second.side == Side::Man) std::swap(pr.first, pr.second);
  std::sort(pairs_.begin(), pairs_.end());
}

Matching Matching::from_partners(const std::vector<int>& man_partner, int women) {
  std::vector<Pair> pairs;
  std::vector<bool> taken(static_cast<std::size_t>(women) + 1, false);
  for (std::size_t i = 0; i < man_partner.size(); ++i) {
    const int m = static_cast<int>(i) + 1;
    const int w = man_partner[i];
    if (w == 0) {
      pairs.push_back({man(m), man(m)});
    } else {
      pairs.push_back({man(m), woman(w)});
      if (w >= 1 && w <= women) taken[w] = true;
    }
  }
  for (int j = 1; j <= women; ++j)
    if (!taken[j]) pairs.push_back({woman(j), woman(j)});
  return Matching(std::move(pairs));
}

bool Matching::contains(PersonRef a, PersonRef b) const {
  if (a.side == Side::Woman && b.side == Side::Man) std::swap(a, b);
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{a, b});
}

bool canonical_less(const Assignment& a, const Assignment& b, int women) {
  auto key = [women](int w) { return w == 0 ? women + 1 : w; };
  return std::lexicographical_compare(a.man_partner.begin(), a.man_partner.end(), b.man_partner.begin(),
                                      b.man_partner.end(), [&](int x, int y) { return key(x) < key(y); });
}

Assignment assignment_of(const Instance& inst, const Matching& m) {
  const int n = inst.men();
  const int p = inst.women();
  // -1 marks "not yet seen".
  Assignment a{std::vector<int>(n, -1), std::vector<int>(p, -1)};
  auto slot = [&](PersonRef x) -> int& {
    if (!inst.contains(x)) throw InvalidMatching("person " + to_string(x) + " is out of range");
    return x.side == Side::Man ? a.man_partner[x.index - 1] : a.woman_partner[x.index - 1];
  };
  for (const auto& pr : m.pairs()) {
    if (pr.first == pr.second) {
      int& s = slot(pr.first);
      if (s != -1) throw InvalidMatching(to_string(pr.first) + " occurs in two pairs");
      s = 0;
      continue;
    }
    if (pr.first.side == pr.second.side)
      throw InvalidMatching("pair (" + to_string(pr.first) + "," + to_string(pr.second) + ") is not man-woman");
    int& sm = slot(pr.first);
    int& sw = slot(pr.second);
    if (sm != -1) throw InvalidMatching(to_string(pr.first) + " occurs in two pairs");
    if (sw != -1) throw InvalidMatching(to_string(pr.second) + " occurs in two pairs");
    sm = pr.second.index;
    sw = pr.first.index;
  }
  for (int i = 0; i < n; ++i)
    if (a.man_partner[i] == -1) throw InvalidMatching("person m" + std::to_string(i + 1) + " is missing");
  for (int j = 0; j < p; ++j)
    if (a.woman_partner[j] == -1) throw InvalidMatching("person w" + std::to_string(j + 1) + " is missing");
  return a;
}

void validate_matching(const Instance& inst, const Matching& m) { (void)assignment_of(inst, m); }

Matching to_matching(const Assignment& a) {
  return Matching::from_partners(a.man_partner, static_cast<int>(a.woman_partner.size()));
}

namespace {

// Level of x's current partner on x's own scale; lower is better.
int current_level(const Instance& inst, PersonRef x, int partner) {
  if (partner == 0) return inst.self_level(x);
  const int g = inst.group_of(x, partner);
  return g == 0 ? INT_MAX : g;
}

}  // namespace

BlockingReport blocking_report(const Instance& inst, const Assignment& a) {
  const int n = inst.men();
  const int p = inst.women();
  std::vector<int> man_level(n), woman_level(p);
  BlockingReport report;
  for (int i = 1; i <= n; ++i) {
    man_level[i - 1] = current_level(inst, man(i), a.man_partner[i - 1]);
    if (man_level[i - 1] == INT_MAX) report.blocking_individuals.push_back(man(i));
  }
  for (int j = 1; j <= p; ++j) {
    woman_level[j - 1] = current_level(inst, woman(j), a.woman_partner[j - 1]);
    if (woman_level[j - 1] == INT_MAX) report.blocking_individuals.push_back(woman(j));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= p; ++j) {
      if (a.man_partner[i - 1] == j) continue;
      const int gm = inst.group_of(man(i), j);
      if (gm == 0 || gm >= man_level[i - 1]) continue;
      const int gw = inst.group_of(woman(j), i);
      if (gw == 0 || gw >= woman_level[j - 1]) continue;
      report.blocking_pairs.emplace_back(i, j);
    }
  }
  return report;
}

BlockingReport blocking_report(const Instance& inst, const Matching& m) {
  return blocking_report(inst, assignment_of(inst, m));
}

bool is_weakly_stable(const Instance& inst, const Assignment& a) { return blocking_report(inst, a).empty(); }

bool is_weakly_stable(const Instance& inst, const Matching& m) { return blocking_report(inst, m).empty(); }

std::string format_matching(const Matching& m) {
  std::ostringstream out;
  for (const auto& pr : m.pairs()) {
    out << to_string(pr.first) << ' ';
    if (pr.first == pr.second)
      out << '-';
    else
      out << to_string(pr.second);
    out << '\n';
  }
  return out.str();
}

namespace {

PersonRef parse_person(std::string_view tok, int line, int col) {
  if (tok.size() < 2 || (tok[0] != 'm' && tok[0] != 'w'))
    throw ParseError("expected a person such as m1 or w2, got '" + std::string(tok) + "'", line, col);
  int idx = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || idx < 1)
    throw ParseError("bad person index in '" + std::string(tok) + "'", line, col);
  return {tok[0] == 'm' ? Side::Man : Side::Woman, idx};
}

}  // namespace

Matching parse_matching(std::string_view text) {
  std::vector<Pair> pairs;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t k = 0; k < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[k]))) {
        ++k;
        continue;
      }
      std::size_t start = k;
      while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      tokens.emplace_back(line.substr(start, k - start), static_cast<int>(start) + 1);
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError("expected two fields per line", line_no, 1);
    PersonRef a = parse_person(tokens[0].first, line_no, tokens[0].second);
    PersonRef b = tokens[1].first == "-" ? a : parse_person(tokens[1].first, line_no, tokens[1].second);
    pairs.push_back({a, b});
  }
  return Matching(std::move(pairs));
}

}  // namespace matchforge
