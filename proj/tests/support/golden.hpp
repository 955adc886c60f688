#pragma once

#include <string>
#include <string_view>

namespace oracle {

/// Canonical form of rule text for golden comparisons: '%' lines and blank
/// lines dropped, head disjuncts and body literals sorted, whitespace removed,
/// rules sorted. One rule per output line.
std::string normalize_rules(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace oracle
