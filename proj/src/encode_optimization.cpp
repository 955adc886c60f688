#include <algorithm>
#include <sstream>

#include "encode_detail.hpp"
#include "matchforge/encode.hpp"

namespace matchforge::encode {

namespace {

using asp::Atom;
using asp::Program;

std::string num(int v) { return std::to_string(v); }

Atom tag(Atom a, const std::string& suffix) {
  a.predicate += suffix;
  return a;
}

Atom primed(const Atom& a) { return tag(a, "p"); }

// Same rules with every predicate primed.
Program primed_program(const Program& p) {
  Program out;
  auto map = [&](const std::vector<asp::AtomId>& ids) {
    std::vector<asp::AtomId> r;
    for (auto id : ids) r.push_back(out.intern(primed(p.atom(id))));
    return r;
  };
  for (const auto& r : p.rules()) out.add_rule(asp::Rule{map(r.head), map(r.positive), map(r.negative)});
  return out;
}

int rank_cost(const Instance& inst, PersonRef x, int group) {
  const auto& groups = inst.preferences(x).groups;
  int better = 0;
  for (int g = 1; g < group; ++g) better += static_cast<int>(groups[g - 1].size());
  return better + 1;
}

class Emitter {
 public:
  Emitter(const Instance& inst, Criterion c, Direction d) : inst_(inst), c_(c), d_(d) {}

  std::string run() {
    header();
    section("ordinary part");
    out_ << asp::format_program(encode_normal(inst_));
    if (c_ != Criterion::Singles) cost_rules("");
    criterion_rules();

    section("primed part");
    out_ << asp::format_program(primed_program(encode_disjunctive(inst_)));
    for (const Atom& a : detail::base_atoms(inst_))
      line("sat :- " + str(primed(a)) + ", " + str(primed(detail::negated(a))) + ".");
    if (c_ != Criterion::Singles) cost_rules("p");
    primed_criterion_rules();

    section("comparison and saturation");
    const std::string cmp = d_ == Direction::Minimize ? "<=" : ">=";
    line("sat :- " + crit() + "(X), " + crit() + "p(Y), X" + cmp + "Y.");
    line(":- not sat.");
    if (c_ != Criterion::Singles) {
      line("mancostp(X,Y) :- sat, manargcost_1p(X), manargcost_2p(Y).");
      line("womancostp(X,Y) :- sat, womanargcost_1p(X), womanargcost_2p(Y).");
    }
    for (const char* pred : {"manproposep", "nmanproposep", "womanproposep", "nwomanproposep"})
      line(std::string(pred) + "(X,Y) :- sat, man(X), woman(Y).");
    for (const char* pred : {"acceptp", "nacceptp"}) {
      line(std::string(pred) + "(X,Y) :- sat, man(X), woman(Y).");
      line(std::string(pred) + "(X,X) :- sat, man(X).");
      line(std::string(pred) + "(X,X) :- sat, woman(X).");
    }
    range("manargcost_1p", 1, inst_.men());
    range("manargcost_2p", 1, inst_.women() + 1);
    range("womanargcost_1p", 1, inst_.women());
    range("womanargcost_2p", 1, inst_.men() + 1);
    for (int i = 1; i <= inst_.men(); ++i) line("man(" + to_string(man(i)) + ").");
    for (int j = 1; j <= inst_.women(); ++j) line("woman(" + to_string(woman(j)) + ").");
    return out_.str();
  }

 private:
  int n() const { return inst_.men(); }
  int p() const { return inst_.women(); }
  std::string crit() const { return std::string(to_string(c_)); }
  static std::string str(const Atom& a) { return asp::to_string(a); }
  void line(const std::string& s) { out_ << s << "\n"; }
  void section(const std::string& name) { out_ << "\n% " << name << "\n"; }
  void range(const std::string& pred, int lo, int hi) {
    if (lo <= hi) line(pred + "(" + num(lo) + ".." + num(hi) + ").");
  }

  void header() {
    const int n = this->n(), p = this->p();
    line("% " + std::string(d_ == Direction::Minimize ? "minimize " : "maximize ") + crit() + " over weakly stable matchings");
    line("% primed copies of predicates carry the suffix p: acceptp, nacceptp, manproposep, ...");
    line("% nX stands for the strong negation of X");
    std::string values;
    switch (c_) {
      case Criterion::SexEq: values = "0.." + num(std::max(n * p + n - p, n * p + p - n)); break;
      case Criterion::Weight: values = num(n + p) + ".." + num(2 * n * p + n + p); break;
      case Criterion::Regret: values = "1.." + num(std::max(n, p) + 1); break;
      case Criterion::Singles: values = "0.." + num(n + p); break;
      case Criterion::ManWeight: values = num(n) + ".." + num(n * (p + 1)); break;
      case Criterion::WomanWeight: values = num(p) + ".." + num(p * (n + 1)); break;
    }
    line("% " + crit() + " ranges over " + values);
    if (c_ != Criterion::Singles) divergence_notes();
    line("#maxint=" + num(2 * n * p + n + p) + ".");
  }

  // The cost rules charge the group index; the rank cost counts the partners
  // ranked strictly higher.
  void divergence_notes() {
    for (PersonRef x : detail::everyone(inst_)) {
      const int level = inst_.self_level(x);
      for (int g = 1; g <= level; ++g) {
        const int rank = rank_cost(inst_, x, g);
        if (rank == g) continue;
        line("% cost divergence: " + to_string(x) + " group " + num(g) + (g == level ? " (incl. single)" : "") +
             " has rule cost " + num(g) + ", rank cost " + num(rank));
      }
    }
  }

  void cost_rules(const std::string& suffix) {
    for (PersonRef x : detail::everyone(inst_)) {
      const std::string head = (x.side == Side::Man ? "mancost" : "womancost") + suffix + "(" + num(x.index) + ",";
      for (int y : inst_.ranked_partners(x))
        line(head + num(inst_.group_of(x, y)) + ") :- " + str(tag(detail::pair_atom(x, y), suffix)) + ".");
      line(head + num(inst_.self_level(x)) + ") :- " + str(tag(accept_atom(x, x), suffix)) + ".");
    }
  }

  void sum_rule(const std::string& side) {
    line(side + "weight(Z) :- #sum{B,A : " + side + "cost(A,B)} = Z, #int(Z).");
  }

  void criterion_rules() {
    switch (c_) {
      case Criterion::SexEq:
        sum_rule("man");
        sum_rule("woman");
        line("sexeq(Z) :- manweight(X), womanweight(Y), Z=X-Y.");
        line("sexeq(Z) :- manweight(X), womanweight(Y), Z=Y-X.");
        break;
      case Criterion::Weight:
        sum_rule("man");
        sum_rule("woman");
        line("weight(Z) :- manweight(X), womanweight(Y), Z=X+Y.");
        break;
      case Criterion::Regret:
        line("manregret(Z) :- #max{B : mancost(A,B)} = Z, #int(Z).");
        line("womanregret(Z) :- #max{B : womancost(A,B)} = Z, #int(Z).");
        line("regret(X) :- manregret(X), womanregret(Y), X>Y.");
        line("regret(Y) :- manregret(X), womanregret(Y), X<=Y.");
        break;
      case Criterion::Singles:
        line("singles(Z) :- #count{B : accept(B,B)} = Z, #int(Z).");
        break;
      case Criterion::ManWeight: sum_rule("man"); break;
      case Criterion::WomanWeight: sum_rule("woman"); break;
    }
  }

  // Successive sums over persons last..1 replace the aggregates, which do not
  // survive saturation.
  void sum_chain(const std::string& side, int last) {
    const std::string sum = side + "sump", cost = side + "costp";
    if (last == 0) {
      line(side + "weightp(0).");
      return;
    }
    line(sum + "(" + num(last) + ",X) :- " + cost + "(" + num(last) + ",X).");
    line(sum + "(J,Z) :- " + sum + "(I,X), " + cost + "(J,Y), Z=X+Y, #succ(J,I).");
    line(side + "weightp(Z) :- " + sum + "(1,Z).");
  }

  void max_chain(const std::string& side, int last) {
    const std::string max = side + "maxp", cost = side + "costp";
    if (last == 0) {
      line(side + "regretp(0).");
      return;
    }
    line(max + "(" + num(last) + ",X) :- " + cost + "(" + num(last) + ",X).");
    line(max + "(J,X) :- " + max + "(I,X), " + cost + "(J,Y), X>=Y, #succ(J,I).");
    line(max + "(J,Y) :- " + max + "(I,X), " + cost + "(J,Y), X<Y, #succ(J,I).");
    line(side + "regretp(Z) :- " + max + "(1,Z).");
  }

  void singles_chain() {
    const int total = n() + p();
    auto single_rules = [&](PersonRef x, int position) {
      const Atom a = primed(accept_atom(x, x));
      line("singlep(" + num(position) + ",1) :- " + str(a) + ".");
      line("singlep(" + num(position) + ",0) :- " + str(detail::negated(a)) + ".");
    };
    for (int i = 1; i <= n(); ++i) single_rules(man(i), p() + i);
    for (int j = 1; j <= p(); ++j) single_rules(woman(j), j);
    if (total == 0) {
      line("singlesp(0).");
      return;
    }
    line("singlesump(" + num(total) + ",X) :- singlep(" + num(total) + ",X).");
    line("singlesump(J,Z) :- singlesump(I,X), singlep(J,Y), Z=X+Y, #succ(J,I).");
    line("singlesp(Z) :- singlesump(1,Z).");
  }

  void primed_criterion_rules() {
    switch (c_) {
      case Criterion::SexEq:
        sum_chain("man", n());
        sum_chain("woman", p());
        line("sexeqp(Z) :- manweightp(X), womanweightp(Y), Z=X-Y.");
        line("sexeqp(Z) :- manweightp(X), womanweightp(Y), Z=Y-X.");
        break;
      case Criterion::Weight:
        sum_chain("man", n());
        sum_chain("woman", p());
        line("weightp(Z) :- manweightp(X), womanweightp(Y), Z=X+Y.");
        break;
      case Criterion::Regret:
        max_chain("man", n());
        max_chain("woman", p());
        line("regretp(X) :- manregretp(X), womanregretp(Y), X>Y.");
        line("regretp(Y) :- manregretp(X), womanregretp(Y), X<=Y.");
        break;
      case Criterion::Singles: singles_chain(); break;
      case Criterion::ManWeight: sum_chain("man", n()); break;
      case Criterion::WomanWeight: sum_chain("woman", p()); break;
    }
  }

  const Instance& inst_;
  Criterion c_;
  Direction d_;
  std::ostringstream out_;
};

}  // namespace

std::string encode_optimization(const Instance& inst, Criterion c, Direction d) { return Emitter(inst, c, d).run(); }

}  // namespace matchforge::encode
