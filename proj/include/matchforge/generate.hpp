#pragma once

#include <cstdint>

#include "matchforge/instance.hpp"

namespace matchforge {

/// Random instance with unacceptability and ties.
///
/// Each person starts from a random permutation of the other side. Every
/// partner is dropped (made unacceptable) with probability `unacceptable`.
/// Walking the remaining list, each partner joins the previous group with
/// probability `ties` instead of opening a new one. With probability `ties`
/// the last group becomes the neutral group; otherwise an empty neutral group
/// is appended. The output depends only on the arguments.
Instance random_instance(int men, int women, double ties, double unacceptable, std::uint64_t seed);

}  // namespace matchforge
