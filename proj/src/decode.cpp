#include <cctype>

#include "encode_detail.hpp"
#include "matchforge/encode.hpp"

namespace matchforge::encode {

using asp::Atom;
using asp::Interpretation;

DecodedAnswer decode_answer(const Instance& inst, const Interpretation& i, std::optional<Criterion> c) {
  DecodedAnswer out;
  std::vector<Pair> pairs;
  const std::string crit = c ? std::string(to_string(*c)) : std::string();
  for (const Atom& a : i) {
    if (a.predicate == "accept" && a.args.size() == 2) {
      try {
        pairs.push_back({parse_person(a.args[0]), parse_person(a.args[1])});
      } catch (const ParseError&) {
        throw InvalidMatching("malformed atom " + asp::to_string(a));
      }
    } else if (c && a.predicate == crit && a.args.size() == 1) {
      if (out.criterion_value) throw DomainError("several " + crit + " atoms in one answer set");
      try {
        std::size_t used = 0;
        const int v = std::stoi(a.args[0], &used);
        if (used != a.args[0].size()) throw std::invalid_argument("trailing");
        out.criterion_value = v;
      } catch (const std::logic_error&) {
        throw DomainError("non-numeric " + asp::to_string(a));
      }
    }
  }
  out.matching = Matching(std::move(pairs));
  validate_matching(inst, out.matching);
  return out;
}

Interpretation stable_set_interpretation(const Instance& inst, const Matching& m) {
  const Assignment a = assignment_of(inst, m);
  if (!is_weakly_stable(inst, a)) throw DomainError("matching is not weakly stable: " + format_matching(m));
  Interpretation out;
  for (const Pair& pair : m.pairs()) out.insert(accept_atom(pair.first, pair.second));
  for (PersonRef x : detail::everyone(inst)) {
    const int partner = x.side == Side::Man ? a.man_partner[x.index - 1] : a.woman_partner[x.index - 1];
    const int level = partner == 0 ? inst.self_level(x) : inst.group_of(x, partner);
    for (int y : inst.ranked_partners(x))
      if (inst.group_of(x, y) < level) out.insert(detail::propose_atom(x, y));
    if (partner != 0) out.insert(detail::propose_atom(x, partner));
  }
  return out;
}

Interpretation disjunctive_counterpart(const Instance& inst, const Interpretation& i) {
  Interpretation out = i;
  for (const Atom& a : detail::base_atoms(inst))
    if (!i.contains(a)) out.insert(detail::negated(a));
  return out;
}

std::vector<Interpretation> parse_answer_sets(std::string_view text) {
  std::vector<Interpretation> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    if (b >= line.size() || line[b] != '{') continue;
    const std::size_t close = line.rfind('}');
    if (close == std::string_view::npos || close < b)
      throw ParseError("missing '}'", line_no, static_cast<int>(line.size()) + 1);

    Interpretation set;
    int depth = 0;
    std::size_t item = b + 1;
    auto take = [&](std::size_t stop) {
      std::string_view atom = line.substr(item, stop - item);
      while (!atom.empty() && std::isspace(static_cast<unsigned char>(atom.front()))) atom.remove_prefix(1);
      while (!atom.empty() && std::isspace(static_cast<unsigned char>(atom.back()))) atom.remove_suffix(1);
      if (atom.empty()) {
        if (stop == close && set.empty()) return;
        throw ParseError("empty atom", line_no, static_cast<int>(item) + 1);
      }
      try {
        set.insert(asp::parse_atom(atom));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, static_cast<int>(item) + 1);
      }
    };
    for (std::size_t k = b + 1; k < close; ++k) {
      if (line[k] == '(') ++depth;
      if (line[k] == ')') --depth;
      if (line[k] == ',' && depth == 0) {
        take(k);
        item = k + 1;
      }
    }
    take(close);
    out.push_back(std::move(set));
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace matchforge::encode
