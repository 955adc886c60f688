#include <cctype>

#include "encode_detail.hpp"
#include "matchforge/encode.hpp"

namespace matchforge::encode {

using asp::Atom;
using asp::Program;
using asp::Rule;

PersonRef parse_person(std::string_view text) {
  auto fail = [&] { throw ParseError("expected a person like m1 or w2, got '" + std::string(text) + "'", 1, 1); };
  if (text.size() < 2 || (text[0] != 'm' && text[0] != 'w')) fail();
  int index = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || index > 100000) fail();
    index = index * 10 + (c - '0');
  }
  if (index < 1 || text[1] == '0') fail();
  return {text[0] == 'm' ? Side::Man : Side::Woman, index};
}

Atom accept_atom(PersonRef x, PersonRef y) {
  if (x.side == Side::Woman && y.side == Side::Man) std::swap(x, y);
  return {"accept", {to_string(x), to_string(y)}};
}

Atom manpropose_atom(int i, int j) { return {"manpropose", {to_string(man(i)), to_string(woman(j))}}; }

Atom womanpropose_atom(int i, int j) { return {"womanpropose", {to_string(man(i)), to_string(woman(j))}}; }

namespace detail {

Atom negated(const Atom& a) { return {"n" + a.predicate, a.args}; }

std::vector<PersonRef> weakly_better(const Instance& inst, PersonRef x, int partner) {
  const int g = inst.group_of(x, partner);
  const Side other = opposite(x.side);
  std::vector<PersonRef> out;
  const auto& groups = inst.preferences(x).groups;
  for (int k = 1; k <= g; ++k)
    for (int y : groups[k - 1])
      if (y != partner) out.push_back({other, y});
  if (g == inst.self_level(x)) out.push_back(x);
  return out;
}

Atom propose_atom(PersonRef x, int partner) {
  return x.side == Side::Man ? manpropose_atom(x.index, partner) : womanpropose_atom(partner, x.index);
}

Atom pair_atom(PersonRef x, int partner) { return accept_atom(x, {opposite(x.side), partner}); }

std::vector<PersonRef> everyone(const Instance& inst) {
  std::vector<PersonRef> out;
  for (int i = 1; i <= inst.men(); ++i) out.push_back(man(i));
  for (int j = 1; j <= inst.women(); ++j) out.push_back(woman(j));
  return out;
}

std::vector<Atom> base_atoms(const Instance& inst) {
  std::vector<Atom> out;
  for (int i = 1; i <= inst.men(); ++i)
    for (int j = 1; j <= inst.women(); ++j) {
      out.push_back(accept_atom(man(i), woman(j)));
      out.push_back(manpropose_atom(i, j));
      out.push_back(womanpropose_atom(i, j));
    }
  for (PersonRef x : everyone(inst)) out.push_back(accept_atom(x, x));
  return out;
}

}  // namespace detail

namespace {

using detail::negated;
using detail::pair_atom;
using detail::propose_atom;
using detail::weakly_better;

struct RuleBuilder {
  Program& p;
  void operator()(const std::vector<Atom>& head, const std::vector<Atom>& pos = {},
                  const std::vector<Atom>& neg = {}) {
    Rule r;
    for (const auto& a : head) r.head.push_back(p.intern(a));
    for (const auto& a : pos) r.positive.push_back(p.intern(a));
    for (const auto& a : neg) r.negative.push_back(p.intern(a));
    p.add_rule(std::move(r));
  }
};

// Singles rule and one proposal rule per acceptable partner.
void normal_person_rules(const Instance& inst, PersonRef x, RuleBuilder& rule) {
  std::vector<Atom> not_paired;
  for (int y : inst.ranked_partners(x)) {
    std::vector<Atom> body;
    for (PersonRef z : weakly_better(inst, x, y)) body.push_back(accept_atom(x, z));
    rule({propose_atom(x, y)}, {}, body);
    not_paired.push_back(pair_atom(x, y));
  }
  rule({accept_atom(x, x)}, {}, not_paired);
}

void disjunctive_person_rules(const Instance& inst, PersonRef x, RuleBuilder& rule) {
  const auto ranked = inst.ranked_partners(x);
  const Atom single = accept_atom(x, x);

  std::vector<Atom> some_partner;
  for (int y : ranked) some_partner.push_back(pair_atom(x, y));
  some_partner.push_back(single);
  rule(some_partner);

  for (int y : ranked) rule({negated(single), negated(pair_atom(x, y))});

  for (int y : ranked) {
    const Atom propose = propose_atom(x, y);
    std::vector<Atom> better;
    for (PersonRef z : weakly_better(inst, x, y)) {
      rule({negated(propose), negated(accept_atom(x, z))});
      better.push_back(accept_atom(x, z));
    }
    better.push_back(propose);
    rule(better);
  }

  const int others = x.side == Side::Man ? inst.women() : inst.men();
  for (int y = 1; y <= others; ++y)
    if (!inst.acceptable(x, y)) rule({negated(propose_atom(x, y))});
}

}  // namespace

Program encode_normal(const Instance& inst) {
  Program p;
  RuleBuilder rule{p};
  for (int i = 1; i <= inst.men(); ++i)
    for (int j = 1; j <= inst.women(); ++j)
      rule({accept_atom(man(i), woman(j))}, {manpropose_atom(i, j), womanpropose_atom(i, j)});
  for (PersonRef x : detail::everyone(inst)) normal_person_rules(inst, x, rule);
  return p;
}

Program encode_disjunctive(const Instance& inst) {
  Program p;
  RuleBuilder rule{p};
  for (int i = 1; i <= inst.men(); ++i)
    for (int j = 1; j <= inst.women(); ++j) {
      const Atom acc = accept_atom(man(i), woman(j));
      const Atom mp = manpropose_atom(i, j);
      const Atom wp = womanpropose_atom(i, j);
      rule({negated(acc), mp});
      rule({negated(acc), wp});
      rule({acc, negated(mp), negated(wp)});
    }
  for (PersonRef x : detail::everyone(inst)) disjunctive_person_rules(inst, x, rule);
  return p;
}

}  // namespace matchforge::encode
