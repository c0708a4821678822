#ifndef FCA_ORACLE_HPP
#define FCA_ORACLE_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fca/concepts.hpp"

// Exhaustive reference computations. These deliberately avoid the lattice
// and enumeration code paths and use nothing beyond the two derivation
// operators, so they can be used to check those paths.

namespace fca::oracle {

/// Largest attribute count the exhaustive enumeration accepts.
inline constexpr std::size_t max_brute_force_attributes = 24;

/// Closes every subset of M and deduplicates. Exponential in |M|.
inline std::vector<FormalConcept> brute_force_concepts(const FormalContext& ctx) {
  const std::size_t n = ctx.attribute_count();
  if (n > max_brute_force_attributes)
    throw std::length_error("brute-force enumeration limited to 24 attributes");
  std::set<std::vector<std::size_t>> seen;
  std::vector<FormalConcept> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    AttributeSet b(n);
    for (std::size_t m = 0; m < n; ++m)
      if ((mask >> m) & 1U)
        b.set(m);
    const ObjectSet extent = derive_extent(ctx, b);
    AttributeSet intent = derive_intent(ctx, extent);
    if (seen.insert(intent.indices()).second)
      out.push_back({extent, std::move(intent)});
  }
  sort_concepts(out);
  return out;
}

/// Cover pairs (lower, upper) of the extent-containment order, found by
/// testing every triple. Indices refer to positions in `concepts`.
inline std::vector<std::pair<std::size_t, std::size_t>> pairwise_covers(const std::vector<FormalConcept>& concepts) {
  const std::size_t n = concepts.size();
  auto less = [&](std::size_t a, std::size_t b) {
    return concepts[a].extent.is_proper_subset_of(concepts[b].extent);
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b))
        continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c)
        between = less(a, c) && less(c, b);
      if (!between)
        out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fca::oracle

#endif  // FCA_ORACLE_HPP
