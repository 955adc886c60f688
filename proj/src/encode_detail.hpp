#pragma once

#include <vector>

#include "matchforge/asp.hpp"
#include "matchforge/instance.hpp"

namespace matchforge::encode::detail {

asp::Atom negated(const asp::Atom& a);

/// Everyone x ranks at least as high as `partner`, except `partner`; x itself
/// (staying single) is included when `partner` is in the neutral group.
std::vector<PersonRef> weakly_better(const Instance& inst, PersonRef x, int partner);

/// x proposes to `partner` (a person of the other side).
asp::Atom propose_atom(PersonRef x, int partner);
/// x is married to `partner`.
asp::Atom pair_atom(PersonRef x, int partner);

/// Men first, then women.
std::vector<PersonRef> everyone(const Instance& inst);

/// accept, manpropose and womanpropose over every man-woman pair, then the
/// self-acceptance atom of every person.
std::vector<asp::Atom> base_atoms(const Instance& inst);

}  // namespace matchforge::encode::detail
