#include "matchforge/generate.hpp"

#include <random>
#include <stdexcept>

#include "matchforge/error.hpp"

namespace matchforge {

namespace {

// Uniform in [0, 1) from the top 53 bits; unlike std::uniform_real_distribution
// this is identical across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

PreferenceList random_list(int others, double ties, double unacceptable, std::mt19937_64& rng) {
  std::vector<int> order(others);
  for (int k = 0; k < others; ++k) order[k] = k + 1;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  PreferenceList list;
  for (int y : order) {
    if (unit(rng) < unacceptable) continue;
    if (list.groups.empty() || unit(rng) >= ties)
      list.groups.push_back({y});
    else
      list.groups.back().push_back(y);
  }
  if (list.groups.empty() || unit(rng) >= ties) list.groups.emplace_back();
  return list;
}

}  // namespace

Instance random_instance(int men, int women, double ties, double unacceptable, std::uint64_t seed) {
  if (men < 0 || women < 0 || men > kMaxSideSize || women > kMaxSideSize)
    throw DomainError("side sizes must lie in 0.." + std::to_string(kMaxSideSize));
  if (!(ties >= 0 && ties <= 1) || !(unacceptable >= 0 && unacceptable <= 1))
    throw DomainError("densities must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<PreferenceList> m, w;
  for (int i = 0; i < men; ++i) m.push_back(random_list(women, ties, unacceptable, rng));
  for (int j = 0; j < women; ++j) w.push_back(random_list(men, ties, unacceptable, rng));
  return Instance(std::move(m), std::move(w));
}

}  // namespace matchforge
