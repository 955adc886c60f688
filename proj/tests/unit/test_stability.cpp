#include <catch_amalgamated.hpp>

#include <random>

#include "matchforge/error.hpp"
#include "matchforge/generate.hpp"
#include "matchforge/stability.hpp"
#include "oracles.hpp"

using namespace matchforge;

namespace {

const char* kExample1 =
    "men: 3\nwomen: 4\n"
    "m1: (4) (1) (3) ()\nm2: (3) (2) ()\nm3: (1) (3) ()\n"
    "w1: (1) (3) ()\nw2: (2) ()\nw3: (3) (2) ()\nw4: (2) (1) ()\n";

const char* kExample3 =
    "men: 2\nwomen: 3\n"
    "m1: (1) (2 3) ()\nm2: (2) (1)\n"
    "w1: (1 2) ()\nw2: (1) ()\nw3: (2) (1) ()\n";

}  // namespace

TEST_CASE("matchings normalise pair order") {
  const Matching a({{woman(4), man(1)}, {woman(2), woman(2)}, {man(2), woman(3)}});
  const Matching b({{man(2), woman(3)}, {man(1), woman(4)}, {woman(2), woman(2)}});
  CHECK(a == b);
  CHECK(a.contains(woman(4), man(1)));
  CHECK(a.contains(man(1), woman(4)));
  CHECK_FALSE(a.contains(man(1), woman(3)));
  CHECK(Matching::from_partners({0, 2}, 3) ==
        Matching({{man(1), man(1)}, {man(2), woman(2)}, {woman(1), woman(1)}, {woman(3), woman(3)}}));
}

TEST_CASE("validate_matching rejects malformed sets") {
  const Instance inst = parse_instance(kExample3);
  const Matching ok = parse_matching("m1 w3\nm2 w2\nw1 -\n");
  CHECK_NOTHROW(validate_matching(inst, ok));
  CHECK_THROWS_AS(validate_matching(inst, parse_matching("m1 w3\nm2 w3\nw1 -\nw2 -\n")), InvalidMatching);
  CHECK_THROWS_AS(validate_matching(inst, parse_matching("m1 w3\nm2 w2\n")), InvalidMatching);
  CHECK_THROWS_AS(validate_matching(inst, parse_matching("m1 m2\nw1 -\nw2 -\nw3 -\n")), InvalidMatching);
  CHECK_THROWS_AS(validate_matching(inst, parse_matching("m1 w3\nm2 w2\nw1 -\nm3 -\n")), InvalidMatching);
  CHECK_THROWS_AS(validate_matching(inst, parse_matching("m1 w3\nm2 w2\nw1 -\nw1 -\n")), InvalidMatching);
}

TEST_CASE("example 1 stable set and a blocking individual") {
  const Instance inst = parse_instance(kExample1);
  const Matching stable = parse_matching("m1 w4\nm2 w3\nm3 w1\nw2 -\n");
  CHECK(is_weakly_stable(inst, stable));
  CHECK(blocking_report(inst, stable).empty());

  const Matching bad = parse_matching("m1 w1\nm2 w3\nm3 w4\nw2 -\n");
  const BlockingReport r = blocking_report(inst, bad);
  CHECK(r.blocking_individuals == std::vector<PersonRef>{man(3), woman(4)});
  CHECK_FALSE(is_weakly_stable(inst, bad));
}

TEST_CASE("example 1 blocking pair") {
  const Instance inst = parse_instance(kExample1);
  const Matching m = parse_matching("m1 w1\nm2 w2\nm3 w3\nw4 -\n");
  const BlockingReport r = blocking_report(inst, m);
  CHECK(r.blocking_individuals.empty());
  CHECK(r.blocking_pairs == std::vector<std::pair<int, int>>{{1, 4}});
}

TEST_CASE("example 3 all-singles matching is unstable") {
  const Instance inst = parse_instance(kExample3);
  const Matching singles = parse_matching("m1 -\nm2 -\nw1 -\nw2 -\nw3 -\n");
  const BlockingReport r = blocking_report(inst, singles);
  CHECK(r.blocking_pairs == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}});
  CHECK(is_weakly_stable(inst, parse_matching("m1 w3\nm2 w1\nw2 -\n")));
  CHECK(is_weakly_stable(inst, parse_matching("m1 w1\nm2 -\nw2 -\nw3 -\n")));
}

TEST_CASE("neutral partners do not block") {
  // m1 is indifferent between w1 and staying single; w1 likes m1.
  const Instance inst = parse_instance("men: 1\nwomen: 1\nm1: (1)\nw1: (1) ()\n");
  CHECK(is_weakly_stable(inst, parse_matching("m1 -\nw1 -\n")));
  CHECK(is_weakly_stable(inst, parse_matching("m1 w1\n")));
}

TEST_CASE("matching text round-trips and reports positions") {
  const Matching m = parse_matching("m1 w4\nm2 w3\nm3 w1\nw2 -\n");
  CHECK(format_matching(m) == "m1 w4\nm2 w3\nm3 w1\nw2 -\n");
  CHECK(parse_matching(format_matching(m)) == m);
  try {
    parse_matching("m1 w1\nm2 x3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(parse_matching("m1\n"), ParseError);
}

TEST_CASE("blocking report agrees with the oracle") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int p = 1 + static_cast<int>(rng() % 4);
    const Instance inst = random_instance(n, p, 0.4, 0.3, rng());
    oracle::Partners mp(n, 0);
    std::vector<bool> used(p + 1, false);
    for (int i = 0; i < n; ++i) {
      const int w = static_cast<int>(rng() % (p + 1));
      if (w != 0 && !used[w]) {
        used[w] = true;
        mp[i] = w;
      }
    }
    const Matching m = oracle::to_matching(inst, mp);
    CHECK(is_weakly_stable(inst, m) == oracle::stable(inst, mp));
  }
}
