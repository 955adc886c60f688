#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchforge/asp.hpp"
#include "matchforge/instance.hpp"
#include "matchforge/solve.hpp"
#include "matchforge/stability.hpp"

// Compilation of instances to answer set programs and decoding of answer sets.
//
// Atom vocabulary: accept(mI,wJ), accept(mI,mI), accept(wJ,wJ),
// manpropose(mI,wJ), womanpropose(mI,wJ). Strong negation is written with an
// "n" prefix (naccept, nmanpropose, nwomanpropose). In optimization text the
// primed copy of a predicate carries a "p" suffix (acceptp, nacceptp,
// mancostp, ...).
namespace matchforge::encode {

/// "m3" -> man(3), "w2" -> woman(2). Throws ParseError.
PersonRef parse_person(std::string_view text);

asp::Atom accept_atom(PersonRef x, PersonRef y);
asp::Atom manpropose_atom(int man_index, int woman_index);
asp::Atom womanpropose_atom(int man_index, int woman_index);

/// The induced normal program. Tight; its answer sets are exactly the weakly
/// stable matchings.
asp::Program encode_normal(const Instance& inst);

/// The disjunctive naf-free counterpart obtained from the completion of
/// encode_normal, negated atoms renamed with the "n" prefix.
asp::Program encode_disjunctive(const Instance& inst);

/// DLV text of the saturation program whose answer sets are the stable
/// matchings optimal for `c`. Includes a '%' header documenting the naming
/// and, when relevant, where the rule costs differ from person_cost.
std::string encode_optimization(const Instance& inst, Criterion c, Direction d);

struct DecodedAnswer {
  Matching matching;
  std::optional<int> criterion_value;
};

/// Reads the matching off the accept atoms and, when `c` is given, the value
/// of the unique c(v) atom. Throws InvalidMatching when the accept atoms do
/// not form a matching of inst and DomainError when several c(v) atoms exist.
DecodedAnswer decode_answer(const Instance& inst, const asp::Interpretation& i,
                            std::optional<Criterion> c = std::nullopt);

/// Answer set of encode_normal corresponding to a weakly stable matching:
/// its accept atoms, each person's proposals to partners strictly preferred
/// over their own, and the mutual proposals of every married pair.
/// Throws DomainError when m is not weakly stable.
asp::Interpretation stable_set_interpretation(const Instance& inst, const Matching& m);

/// i plus the n-atom of every base atom of the instance that i leaves false.
asp::Interpretation disjunctive_counterpart(const Instance& inst, const asp::Interpretation& i);

/// Solver output: one answer set per line written as "{a, b(c,d)}". Lines
/// not starting with '{' (banners, blank lines) are skipped. Throws
/// ParseError.
std::vector<asp::Interpretation> parse_answer_sets(std::string_view text);

}  // namespace matchforge::encode
