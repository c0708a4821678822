#ifndef FCA_SIMILARITY_HPP
#define FCA_SIMILARITY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <limits>
#include <vector>

#include "fca/lattice.hpp"

namespace fca {

/// Exact non-negative fraction; compared by cross-multiplication.
struct Ratio {
  std::size_t num = 0;
  std::size_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept { return a.num * b.den == b.num * a.den; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    return a.num * b.den <=> b.num * a.den;
  }
};

/// |a ∩ b| / |a ∪ b|, taken as 1 when both sets are empty.
inline Ratio jaccard(const Bitset& a, const Bitset& b) {
  const auto uni = (a | b).count();
  if (uni == 0)
    return {1, 1};
  return {(a & b).count(), uni};
}

struct SimilarityResult {
  ConceptId concept_id;
  std::size_t lattice_distance;
  Ratio intent_jaccard;
};

namespace detail {

/// Concepts reachable from `id` in 1..steps hops along `next`.
template <class Next>
std::vector<ConceptId> reach(const ConceptLattice& lat, ConceptId id, std::size_t steps, Next&& next) {
  lat.check(id);
  std::vector<std::size_t> depth(lat.size(), std::numeric_limits<std::size_t>::max());
  std::deque<ConceptId> queue{id};
  depth[id] = 0;
  std::vector<ConceptId> out;
  while (!queue.empty()) {
    const ConceptId cur = queue.front();
    queue.pop_front();
    if (depth[cur] == steps)
      continue;
    for (ConceptId n : next(cur)) {
      if (depth[n] != std::numeric_limits<std::size_t>::max())
        continue;
      depth[n] = depth[cur] + 1;
      out.push_back(n);
      queue.push_back(n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Concepts reachable from `id` by 1..steps upward cover edges.
inline std::vector<ConceptId> generalize(const ConceptLattice& lat, ConceptId id, std::size_t steps) {
  return detail::reach(lat, id, steps, [&](ConceptId c) -> const auto& { return lat.upper_covers(c); });
}

/// Concepts reachable from `id` by 1..steps downward cover edges.
inline std::vector<ConceptId> specialize(const ConceptLattice& lat, ConceptId id, std::size_t steps) {
  return detail::reach(lat, id, steps, [&](ConceptId c) -> const auto& { return lat.lower_covers(c); });
}

/// Other concepts sharing at least one upper cover with `id`.
inline std::vector<ConceptId> siblings(const ConceptLattice& lat, ConceptId id) {
  std::vector<ConceptId> out;
  for (ConceptId parent : lat.upper_covers(id))
    for (ConceptId s : lat.lower_covers(parent))
      if (s != id)
        out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Hop counts from `id` to every concept in the undirected cover graph.
inline std::vector<std::size_t> distances_from(const ConceptLattice& lat, ConceptId id) {
  lat.check(id);
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(lat.size(), unseen);
  std::deque<ConceptId> queue{id};
  dist[id] = 0;
  auto visit = [&](ConceptId from, ConceptId to) {
    if (dist[to] == unseen) {
      dist[to] = dist[from] + 1;
      queue.push_back(to);
    }
  };
  while (!queue.empty()) {
    const ConceptId cur = queue.front();
    queue.pop_front();
    for (ConceptId n : lat.upper_covers(cur))
      visit(cur, n);
    for (ConceptId n : lat.lower_covers(cur))
      visit(cur, n);
  }
  return dist;
}

inline std::size_t lattice_distance(const ConceptLattice& lat, ConceptId a, ConceptId b) {
  lat.check(b);
  return distances_from(lat, a)[b];
}

/// The k concepts closest to `id`, by (distance asc, intent Jaccard desc, id asc).
inline std::vector<SimilarityResult> similar_concepts(const ConceptLattice& lat, ConceptId id, std::size_t k) {
  const auto dist = distances_from(lat, id);
  const auto& intent = lat.concept_at(id).intent;
  std::vector<SimilarityResult> all;
  for (ConceptId c = 0; c < lat.size(); ++c)
    if (c != id)
      all.push_back({c, dist[c], jaccard(intent, lat.concept_at(c).intent)});
  auto better = [](const SimilarityResult& a, const SimilarityResult& b) {
    if (a.lattice_distance != b.lattice_distance)
      return a.lattice_distance < b.lattice_distance;
    if (a.intent_jaccard != b.intent_jaccard)
      return a.intent_jaccard > b.intent_jaccard;
    return a.concept_id < b.concept_id;
  };
  const auto keep = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(), better);
  all.resize(keep);
  return all;
}

/// Object similarity: similar_concepts on the object concept of g.
inline std::vector<SimilarityResult> similar_to_object(const FormalContext& ctx, const ConceptLattice& lat,
                                                       std::size_t g, std::size_t k) {
  return similar_concepts(lat, lat.id_of(object_concept(ctx, g)), k);
}

/// The most specific concept whose intent contains `attrs`. Falls through to
/// the bottom concept when no object carries all of them.
inline ConceptId nearest_concept(const FormalContext& ctx, const ConceptLattice& lat, const AttributeSet& attrs) {
  const ObjectSet extent = derive_extent(ctx, attrs);
  if (auto id = lat.find_extent(extent))
    return *id;
  throw Error(Errc::MixedContext, "lattice was not built from this context");
}

/**
 * Most representative object of the category given by `category`: among the
 * objects carrying every category attribute, the one whose own attribute set
 * is closest (Jaccard) to the category's closure. Ties go to the lowest
 * object index.
 */
inline std::size_t prototype(const FormalContext& ctx, const AttributeSet& category) {
  const ObjectSet members = derive_extent(ctx, category);
  if (members.empty())
    throw Error(Errc::EmptyCategory, "no object has every category attribute");
  const AttributeSet closed = derive_intent(ctx, members);
  std::size_t best = 0;
  Ratio best_score{0, 1};
  bool first = true;
  members.for_each([&](std::size_t g) {
    const Ratio score = jaccard(ctx.row(g), closed);
    if (first || score > best_score) {
      best = g;
      best_score = score;
      first = false;
    }
  });
  return best;
}

}  // namespace fca

#endif  // FCA_SIMILARITY_HPP
