#ifndef FCA_CONCEPTS_HPP
#define FCA_CONCEPTS_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fca/context.hpp"

namespace fca {

/// A closed (extent, intent) pair of a formal context.
struct FormalConcept {
  ObjectSet extent;
  AttributeSet intent;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// Canonical concept order: larger extents first, then intents compared
/// lexicographically as sorted index lists.
inline bool concept_order_less(const FormalConcept& a, const FormalConcept& b) {
  const auto ca = a.extent.count();
  const auto cb = b.extent.count();
  if (ca != cb)
    return ca > cb;
  return lex_compare(a.intent, b.intent) < 0;
}

inline void sort_concepts(std::vector<FormalConcept>& concepts) {
  struct Keyed {
    std::size_t extent_size;
    std::vector<std::size_t> intent;
    FormalConcept concept_;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(concepts.size());
  for (auto& c : concepts)
    keyed.push_back({c.extent.count(), c.intent.indices(), std::move(c)});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.extent_size != b.extent_size)
      return a.extent_size > b.extent_size;
    return a.intent < b.intent;
  });
  for (std::size_t i = 0; i < keyed.size(); ++i)
    concepts[i] = std::move(keyed[i].concept_);
}

/**
 * All formal concepts of `ctx`, in canonical order.
 *
 * Intents are generated in lectic order with NextClosure: starting from the
 * closure of the empty set, each step scans attribute positions from the
 * highest down and accepts the first closure of (prefix + m) that adds no
 * attribute below m. The loop is flat, so memory is bounded by one candidate
 * set regardless of how many concepts the context has.
 */
inline std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx) {
  const std::size_t n = ctx.attribute_count();
  std::vector<FormalConcept> out;

  ObjectSet extent = ctx.all_objects();
  AttributeSet intent = derive_intent(ctx, extent);
  out.push_back({extent, intent});

  const AttributeSet all = ctx.all_attributes();
  while (intent != all) {
    for (std::size_t i = n; i-- > 0;) {
      if (intent.test(i)) {
        intent.reset(i);
        continue;
      }
      AttributeSet candidate = intent;
      candidate.set(i);
      ObjectSet cand_extent = derive_extent(ctx, candidate);
      AttributeSet closed = derive_intent(ctx, cand_extent);
      // intent holds only positions below i at this point
      if (closed.prefix(i) == intent) {
        intent = std::move(closed);
        out.push_back({std::move(cand_extent), intent});
        break;
      }
    }
  }

  sort_concepts(out);
  return out;
}

/// Most specific concept whose extent contains object g.
inline FormalConcept object_concept(const FormalContext& ctx, std::size_t g) {
  ctx.check_object(g);
  AttributeSet intent = ctx.row(g);
  return {derive_extent(ctx, intent), std::move(intent)};
}

/// Most general concept whose intent contains attribute m.
inline FormalConcept attribute_concept(const FormalContext& ctx, std::size_t m) {
  ctx.check_attribute(m);
  ObjectSet extent = ctx.column(m);
  return {extent, derive_intent(ctx, extent)};
}

inline bool is_closed_pair(const FormalContext& ctx, const FormalConcept& c) {
  return derive_intent(ctx, c.extent) == c.intent && derive_extent(ctx, c.intent) == c.extent;
}

}  // namespace fca

#endif  // FCA_CONCEPTS_HPP
