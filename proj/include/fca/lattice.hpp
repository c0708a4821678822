#ifndef FCA_LATTICE_HPP
#define FCA_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fca/concepts.hpp"

namespace fca {

using ConceptId = std::size_t;
using CoverEdge = std::pair<ConceptId, ConceptId>;  // (lower, upper)

class ConceptLattice;

/// A concept id bound to the lattice that issued it.
struct ConceptRef {
  const ConceptLattice* lattice = nullptr;
  ConceptId id = 0;
};

/**
 * The concept lattice of a context: every concept, ordered by extent
 * containment, stored as its Hasse diagram.
 *
 * Concept ids are positions in canonical enumeration order, so id 0 is the
 * top (largest extent) and the last id is the bottom. Levels are longest
 * cover-path distances from the top.
 */
class ConceptLattice {
public:
  ConceptLattice() = default;

  std::size_t size() const noexcept { return concepts_.size(); }
  const std::vector<FormalConcept>& concepts() const noexcept { return concepts_; }

  const FormalConcept& concept_at(ConceptId id) const {
    check(id);
    return concepts_[id];
  }

  ConceptId top() const noexcept { return top_; }
  ConceptId bottom() const noexcept { return bottom_; }

  const std::vector<ConceptId>& upper_covers(ConceptId id) const {
    check(id);
    return upper_[id];
  }
  const std::vector<ConceptId>& lower_covers(ConceptId id) const {
    check(id);
    return lower_[id];
  }

  std::size_t level_of(ConceptId id) const {
    check(id);
    return level_[id];
  }

  std::size_t height() const {
    return level_.empty() ? 0 : *std::max_element(level_.begin(), level_.end());
  }

  /// All cover edges sorted by (lower, upper).
  const std::vector<CoverEdge>& covers() const noexcept { return edges_; }

  std::optional<ConceptId> find_extent(const ObjectSet& extent) const {
    auto it = by_extent_.find(extent);
    return it == by_extent_.end() ? std::nullopt : std::optional(it->second);
  }

  /// Id of a concept of this lattice; BadId if it is not one.
  ConceptId id_of(const FormalConcept& c) const {
    auto id = find_extent(c.extent);
    if (!id || concepts_[*id].intent != c.intent)
      throw Error(Errc::BadId, "concept is not part of this lattice");
    return *id;
  }

  /// Order test on ids of this lattice: extent(a) is a subset of extent(b).
  bool leq(ConceptId a, ConceptId b) const {
    return concept_at(a).extent.is_subset_of(concept_at(b).extent);
  }

  ConceptRef ref(ConceptId id) const {
    check(id);
    return {this, id};
  }

  void check(ConceptId id) const {
    if (id >= concepts_.size())
      throw Error(Errc::BadId, "concept id " + std::to_string(id) + " out of range");
  }

  /// Assembles a lattice from concepts in canonical order and their cover
  /// edges. Levels, top and bottom are derived. Throws BadId on edges that
  /// reference missing concepts.
  static ConceptLattice from_parts(std::vector<FormalConcept> concepts, std::vector<CoverEdge> edges) {
    ConceptLattice lat;
    lat.concepts_ = std::move(concepts);
    const std::size_t n = lat.concepts_.size();
    lat.upper_.assign(n, {});
    lat.lower_.assign(n, {});
    for (auto [lo, up] : edges) {
      lat.check(lo);
      lat.check(up);
      lat.upper_[lo].push_back(up);
      lat.lower_[up].push_back(lo);
    }
    for (auto& v : lat.upper_)
      std::sort(v.begin(), v.end());
    for (auto& v : lat.lower_)
      std::sort(v.begin(), v.end());
    std::sort(edges.begin(), edges.end());
    lat.edges_ = std::move(edges);
    for (ConceptId id = 0; id < n; ++id)
      lat.by_extent_.emplace(lat.concepts_[id].extent, id);

    // upper covers have strictly larger extents, hence smaller ids
    lat.level_.assign(n, 0);
    for (ConceptId id = 0; id < n; ++id)
      for (auto up : lat.upper_[id]) {
        if (up >= id)
          throw Error(Errc::BadId, "cover edge " + std::to_string(id) + "->" + std::to_string(up) +
                                       " does not follow canonical order");
        lat.level_[id] = std::max(lat.level_[id], lat.level_[up] + 1);
      }
    lat.top_ = 0;
    lat.bottom_ = n == 0 ? 0 : n - 1;
    return lat;
  }

private:
  std::vector<FormalConcept> concepts_;
  std::vector<std::vector<ConceptId>> upper_;
  std::vector<std::vector<ConceptId>> lower_;
  std::vector<std::size_t> level_;
  std::vector<CoverEdge> edges_;
  std::unordered_map<ObjectSet, ConceptId, BitsetHash> by_extent_;
  ConceptId top_ = 0;
  ConceptId bottom_ = 0;
};

/**
 * Builds the concept lattice of `ctx`.
 *
 * Upper neighbours of (A, B) are found among the concepts generated by
 * adding one outside object g: ((B ∩ g')', B ∩ g'). Every upper cover arises
 * this way, and the covers are exactly the candidates with minimal extent.
 */
inline ConceptLattice build_lattice(const FormalContext& ctx) {
  std::vector<FormalConcept> concepts = enumerate_concepts(ctx);
  std::unordered_map<ObjectSet, ConceptId, BitsetHash> by_extent;
  for (ConceptId id = 0; id < concepts.size(); ++id)
    by_extent.emplace(concepts[id].extent, id);

  std::vector<CoverEdge> edges;
  std::vector<ConceptId> candidates;
  for (ConceptId id = 0; id < concepts.size(); ++id) {
    const auto& [extent, intent] = concepts[id];
    candidates.clear();
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
      if (extent.test(g))
        continue;
      const ObjectSet up = derive_extent(ctx, intent & ctx.row(g));
      candidates.push_back(by_extent.at(up));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto c : candidates) {
      const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](ConceptId d) {
        return d != c && concepts[d].extent.is_proper_subset_of(concepts[c].extent);
      });
      if (minimal)
        edges.emplace_back(id, c);
    }
  }
  return ConceptLattice::from_parts(std::move(concepts), std::move(edges));
}

/// Subconcept test on bare concepts. MixedContext when the two concepts are
/// drawn from contexts of different shape.
inline bool leq(const FormalConcept& a, const FormalConcept& b) {
  if (a.extent.universe() != b.extent.universe() || a.intent.universe() != b.intent.universe())
    throw Error(Errc::MixedContext, "concepts come from different contexts");
  return a.extent.is_subset_of(b.extent);
}

/// Subconcept test on lattice-bound ids. MixedContext when the ids were
/// issued by different lattices.
inline bool leq(ConceptRef a, ConceptRef b) {
  if (a.lattice == nullptr || a.lattice != b.lattice)
    throw Error(Errc::MixedContext, "concept ids come from different lattices");
  return a.lattice->leq(a.id, b.id);
}

}  // namespace fca

#endif  // FCA_LATTICE_HPP
