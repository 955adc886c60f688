#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "golden.hpp"
#include "matchforge/encode.hpp"
#include "matchforge/generate.hpp"
#include "oracles.hpp"

using namespace matchforge;
using namespace matchforge::encode;
using asp::Interpretation;

namespace {

const std::string kData = MATCHFORGE_TEST_DATA;

Instance example(int k) { return parse_instance(oracle::read_file(kData + "/data/example" + std::to_string(k) + ".smpi")); }

const Matching kS1 = parse_matching("m1 w3\nm2 w1\nw2 -\n");
const Matching kS2 = parse_matching("m1 w2\nm2 w1\nw3 -\n");
const Matching kS3 = parse_matching("m1 w1\nm2 -\nw2 -\nw3 -\n");

bool has_rule(const asp::Program& p, const std::string& text) {
  for (const auto& r : p.rules())
    if (asp::format_rule(p, r) == text) return true;
  return false;
}

Interpretation accept_atoms(const Interpretation& i) {
  Interpretation out;
  for (const auto& a : i)
    if (a.predicate == "accept") out.insert(a);
  return out;
}

bool contains_line(const std::string& text, const std::string& line) {
  return text.find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("persons and atoms") {
  CHECK(parse_person("m12") == man(12));
  CHECK(parse_person("w1") == woman(1));
  CHECK_THROWS_AS(parse_person("x1"), ParseError);
  CHECK_THROWS_AS(parse_person("m0"), ParseError);
  CHECK(asp::to_string(accept_atom(woman(2), man(1))) == "accept(m1,w2)");
  CHECK(asp::to_string(accept_atom(woman(2), woman(2))) == "accept(w2,w2)");
  CHECK(asp::to_string(manpropose_atom(1, 3)) == "manpropose(m1,w3)");
  CHECK(asp::to_string(womanpropose_atom(2, 1)) == "womanpropose(m2,w1)");
}

TEST_CASE("normal encoding of example 3") {
  const asp::Program p = encode_normal(example(3));
  CHECK(p.kind() == asp::ProgramKind::Normal);
  CHECK(asp::is_tight(p));
  CHECK(p.rules().size() == 21);
  CHECK(has_rule(p, "manpropose(m1,w1)."));
  CHECK(has_rule(p, "manpropose(m2,w1) :- not accept(m2,w2), not accept(m2,m2)."));
  CHECK(has_rule(p, "accept(m1,m1) :- not accept(m1,w1), not accept(m1,w2), not accept(m1,w3)."));
  CHECK(has_rule(p, "womanpropose(m1,w3) :- not accept(m2,w3)."));
  CHECK_FALSE(has_rule(p, "womanpropose(m2,w2)."));
}

TEST_CASE("normal encoding rule count on example 1") {
  const asp::Program p = encode_normal(example(1));
  // 12 accept rules, 14 proposals, 7 singles rules.
  CHECK(p.rules().size() == 12 + 14 + 7);
  CHECK(has_rule(p, "accept(w2,w2) :- not accept(m2,w2)."));
}

TEST_CASE("unacceptable partners get no proposal rule") {
  const Instance inst = parse_instance("men: 1\nwomen: 1\nm1: ()\nw1: (1) ()\n");
  const asp::Program p = encode_normal(inst);
  for (const auto& r : p.rules())
    for (auto h : r.head) CHECK(p.atom(h).predicate != "manpropose");
  CHECK(has_rule(p, "accept(m1,m1)."));
  CHECK(has_rule(p, "womanpropose(m1,w1)."));
  const auto sets = asp::enumerate_answer_sets_tight(p);
  REQUIRE(sets.size() == 1);
  CHECK(decode_answer(inst, sets[0]).matching == parse_matching("m1 -\nw1 -\n"));
}

TEST_CASE("answer sets of example 3") {
  const Instance inst = example(3);
  const auto sets = asp::enumerate_answer_sets_tight(encode_normal(inst));
  REQUIRE(sets.size() == 3);
  std::vector<Interpretation> accepts;
  for (const auto& s : sets) accepts.push_back(accept_atoms(s));
  std::sort(accepts.begin(), accepts.end());
  std::vector<Interpretation> expected = {
      Interpretation::of({"accept(m1,w3)", "accept(m2,w1)", "accept(w2,w2)"}),
      Interpretation::of({"accept(m1,w2)", "accept(m2,w1)", "accept(w3,w3)"}),
      Interpretation::of({"accept(m1,w1)", "accept(m2,m2)", "accept(w2,w2)", "accept(w3,w3)"})};
  std::sort(expected.begin(), expected.end());
  CHECK(accepts == expected);
  CHECK(asp::enumerate_answer_sets_tight(encode_normal(example(1))).size() == 1);
}

TEST_CASE("stable set interpretations are answer sets") {
  const Instance inst = example(3);
  const asp::Program normal = encode_normal(inst);
  const asp::Program disj = encode_disjunctive(inst);
  for (const Matching& m : {kS1, kS2, kS3}) {
    const Interpretation i = stable_set_interpretation(inst, m);
    CHECK(asp::is_answer_set(normal, i));
    CHECK(asp::least_model(asp::reduct(normal, i)) == i);
    CHECK(asp::is_answer_set(disj, disjunctive_counterpart(inst, i)));
    CHECK(decode_answer(inst, i).matching == m);
  }
  const Interpretation s1 = stable_set_interpretation(inst, kS1);
  CHECK(s1.contains(asp::parse_atom("manpropose(m1,w1)")));
  CHECK(s1.contains(asp::parse_atom("womanpropose(m1,w3)")));
  CHECK(s1.contains(asp::parse_atom("womanpropose(m2,w3)")));
  CHECK_THROWS_AS(stable_set_interpretation(inst, parse_matching("m1 -\nm2 -\nw1 -\nw2 -\nw3 -\n")), DomainError);
}

TEST_CASE("disjunctive encoding of example 3") {
  const Instance inst = example(3);
  const asp::Program p = encode_disjunctive(inst);
  CHECK(p.is_naf_free());
  CHECK(p.kind() == asp::ProgramKind::SimpleDisjunctive);
  CHECK(has_rule(p, "nmanpropose(m2,w3)."));
  CHECK(has_rule(p, "nwomanpropose(m2,w2)."));
  CHECK(has_rule(p, "naccept(m1,w1) v manpropose(m1,w1)."));
  CHECK(has_rule(p, "accept(m1,w1) v nmanpropose(m1,w1) v nwomanpropose(m1,w1)."));
  CHECK(has_rule(p, "accept(m1,w1) v accept(m1,w2) v accept(m1,w3) v accept(m1,m1)."));
  CHECK(has_rule(p, "naccept(m1,m1) v naccept(m1,w2)."));
  CHECK(has_rule(p, "nmanpropose(m1,w2) v naccept(m1,w3)."));
  CHECK(has_rule(p, "accept(m1,w1) v accept(m1,w3) v manpropose(m1,w2)."));
  CHECK(has_rule(p, "accept(m2,w1) v womanpropose(m1,w1)."));
}

TEST_CASE("decoding answer sets") {
  const Instance inst = example(3);
  Interpretation i = Interpretation::of({"accept(m2,w1)", "accept(m1,w3)", "accept(w2,w2)", "regret(2)", "sat"});
  const auto d = decode_answer(inst, i, Criterion::Regret);
  CHECK(d.matching == kS1);
  CHECK(d.criterion_value == 2);
  CHECK_FALSE(decode_answer(inst, i).criterion_value.has_value());
  CHECK_FALSE(decode_answer(inst, i, Criterion::Weight).criterion_value.has_value());

  i.insert(asp::parse_atom("regret(3)"));
  CHECK_THROWS_AS(decode_answer(inst, i, Criterion::Regret), DomainError);
  CHECK_THROWS_AS(decode_answer(inst, Interpretation::of({"accept(m1,w3)", "accept(m2,w3)"})), InvalidMatching);
  CHECK_THROWS_AS(decode_answer(inst, Interpretation::of({"accept(m1,w3)", "accept(m2,w1)"})), InvalidMatching);
  CHECK_THROWS_AS(decode_answer(inst, Interpretation::of({"accept(m1,zz)", "accept(m2,w1)"})), InvalidMatching);
  CHECK_THROWS_AS(decode_answer(inst, Interpretation::of({"accept(m1,w3)", "accept(m2,w1)", "accept(w2,w2)", "regret(x)"}),
                                Criterion::Regret),
                  DomainError);
}

TEST_CASE("parsing solver output") {
  const auto sets = parse_answer_sets(
      "DLV 2.1\n\n{accept(m1,w3), accept(m2,w1), accept(w2,w2), regret(2)}\n  {sat}\n{}\nCost ([Weight:Level]): <0>\n");
  REQUIRE(sets.size() == 3);
  CHECK(sets[0].size() == 4);
  CHECK(sets[0].contains(asp::parse_atom("accept(m2,w1)")));
  CHECK(sets[1] == Interpretation::of({"sat"}));
  CHECK(sets[2].empty());
  CHECK_THROWS_AS(parse_answer_sets("{a, b\n"), ParseError);
  CHECK_THROWS_AS(parse_answer_sets("{a, , b}\n"), ParseError);
  CHECK_THROWS_AS(parse_answer_sets("{a, B}\n"), ParseError);
}

TEST_CASE("emitted text reparses to the same program") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    const Instance inst = random_instance(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4), 0.3, 0.3, rng());
    const asp::Program n = encode_normal(inst);
    CHECK(asp::parse_program(asp::format_program(n)) == n);
    const asp::Program d = encode_disjunctive(inst);
    CHECK(asp::parse_program(asp::format_program(d)) == d);
  }
}

TEST_CASE("golden normal encoding") {
  const std::string golden = oracle::read_file(kData + "/golden/example3_normal.lp");
  CHECK(oracle::normalize_rules(asp::format_program(encode_normal(example(3)))) == oracle::normalize_rules(golden));
}

TEST_CASE("golden minimum-regret program") {
  const std::string golden = oracle::read_file(kData + "/golden/example3_regret_min.lp");
  const std::string text = encode_optimization(example(3), Criterion::Regret, Direction::Minimize);
  CHECK(oracle::normalize_rules(text) == oracle::normalize_rules(golden));
}

TEST_CASE("normalization is insensitive to literal and rule order") {
  CHECK(oracle::normalize_rules("b :- y, x.\n% note\n\na v c.\n") == oracle::normalize_rules("c v a.\nb :- x,y.\n"));
  CHECK(oracle::normalize_rules("p(X) :- #max{B : q(A,B)} = X, r(X).") ==
        oracle::normalize_rules("p(X) :- r(X), #max{B: q(A,B)}=X."));
  CHECK(oracle::normalize_rules("a :- b.") != oracle::normalize_rules("a :- c."));
}

TEST_CASE("optimization programs") {
  const Instance inst = parse_instance("men: 1\nwomen: 3\nm1: (1) (2) (3) ()\nw1: (1) ()\nw2: (1) ()\nw3: (1) ()\n");
  const std::string singles = encode_optimization(inst, Criterion::Singles, Direction::Maximize);
  CHECK(contains_line(singles, "singlep(4,1) :- acceptp(m1,m1)."));
  CHECK(contains_line(singles, "sat :- singles(X), singlesp(Y), X>=Y."));
  CHECK(singles.find("mancostp(X,Y) :- sat") == std::string::npos);

  const std::string sexeq = encode_optimization(example(3), Criterion::SexEq, Direction::Minimize);
  CHECK(contains_line(sexeq, "sexeq(Z) :- manweight(X), womanweight(Y), Z=X-Y."));
  CHECK(contains_line(sexeq, "sexeq(Z) :- manweight(X), womanweight(Y), Z=Y-X."));
  CHECK(contains_line(sexeq, "sat :- sexeq(X), sexeqp(Y), X<=Y."));
  CHECK(contains_line(sexeq, ":- not sat."));
  CHECK(sexeq.rfind("% minimize sexeq", 0) == 0);

  const std::string plain = encode_optimization(example(1), Criterion::Weight, Direction::Minimize);
  CHECK(plain.find("cost divergence") == std::string::npos);
  CHECK(encode_optimization(example(3), Criterion::Weight, Direction::Minimize).find("cost divergence") !=
        std::string::npos);
}
