#ifndef FCA_EXPORT_HPP
#define FCA_EXPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fca/lattice.hpp"

namespace fca {

// JSON ----------------------------------------------------------------------

/// Lattice document. Keys are emitted in a fixed order and every array is
/// sorted by id (concepts) or by (lower, upper) (covers); names keep context
/// order.
inline nlohmann::ordered_json lattice_to_json(const ConceptLattice& lat, const FormalContext& ctx) {
  nlohmann::ordered_json doc;
  doc["objects"] = ctx.objects();
  doc["attributes"] = ctx.attributes();
  auto concepts = nlohmann::ordered_json::array();
  for (ConceptId id = 0; id < lat.size(); ++id) {
    const auto& c = lat.concept_at(id);
    nlohmann::ordered_json rec;
    rec["id"] = id;
    rec["extent"] = ctx.names_of_objects(c.extent);
    rec["intent"] = ctx.names_of_attributes(c.intent);
    rec["level"] = lat.level_of(id);
    concepts.push_back(std::move(rec));
  }
  doc["concepts"] = std::move(concepts);
  auto covers = nlohmann::ordered_json::array();
  for (auto [lo, up] : lat.covers())
    covers.push_back({lo, up});
  doc["covers"] = std::move(covers);
  doc["top"] = lat.top();
  doc["bottom"] = lat.bottom();
  return doc;
}

inline std::string export_json(const ConceptLattice& lat, const FormalContext& ctx) {
  return lattice_to_json(lat, ctx).dump() + "\n";
}

struct LatticeDocument {
  FormalContext context;
  ConceptLattice lattice;
};

/**
 * Reads a lattice document back. The context is recovered from the concept
 * records (g has m iff some concept holds both), then every record is checked
 * against it: ids sequential, pairs closed, canonical order, stored
 * levels/top/bottom consistent with the cover edges, and concepts and covers
 * identical to a fresh build. MalformedJson on any mismatch.
 */
inline LatticeDocument import_json(const std::string& text) {
  using nlohmann::json;
  auto fail = [](const std::string& why) -> Error { return Error(Errc::MalformedJson, why); };
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw fail(e.what());
  }

  try {
    auto objects = doc.at("objects").get<std::vector<std::string>>();
    auto attributes = doc.at("attributes").get<std::vector<std::string>>();
    const auto& records = doc.at("concepts");

    // names resolved against a relation-free context first
    const FormalContext names(objects, attributes, {});
    std::vector<FormalConcept> concepts;
    std::vector<std::size_t> levels;
    FormalContext::Incidence incidence;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      if (rec.at("id").get<std::size_t>() != i)
        throw fail("concept ids are not sequential at position " + std::to_string(i));
      FormalConcept c{names.objects_named(rec.at("extent").get<std::vector<std::string>>()),
                      names.attributes_named(rec.at("intent").get<std::vector<std::string>>())};
      c.extent.for_each([&](std::size_t g) {
        c.intent.for_each([&](std::size_t m) { incidence.emplace_back(g, m); });
      });
      concepts.push_back(std::move(c));
      levels.push_back(rec.at("level").get<std::size_t>());
    }
    FormalContext ctx(std::move(objects), std::move(attributes), incidence);

    for (std::size_t i = 0; i < concepts.size(); ++i) {
      if (!is_closed_pair(ctx, concepts[i]))
        throw fail("concept " + std::to_string(i) + " is not a closed pair");
      if (i > 0 && !concept_order_less(concepts[i - 1], concepts[i]))
        throw fail("concepts are not in canonical order at " + std::to_string(i));
    }

    std::vector<CoverEdge> edges;
    for (const auto& e : doc.at("covers")) {
      if (!e.is_array() || e.size() != 2)
        throw fail("cover entries must be [lower, upper] pairs");
      edges.emplace_back(e[0].get<ConceptId>(), e[1].get<ConceptId>());
    }
    ConceptLattice lat = ConceptLattice::from_parts(std::move(concepts), std::move(edges));
    for (ConceptId id = 0; id < lat.size(); ++id)
      if (lat.level_of(id) != levels[id])
        throw fail("level of concept " + std::to_string(id) + " disagrees with covers");
    if (doc.at("top").get<ConceptId>() != lat.top() || doc.at("bottom").get<ConceptId>() != lat.bottom())
      throw fail("top/bottom disagree with concept order");
    const ConceptLattice rebuilt = build_lattice(ctx);
    if (rebuilt.concepts() != lat.concepts())
      throw fail("concept list is incomplete for the recovered context");
    if (rebuilt.covers() != lat.covers())
      throw fail("cover edges are not the Hasse diagram of the recovered context");
    return {std::move(ctx), std::move(lat)};
  } catch (const json::exception& e) {
    throw fail(e.what());
  }
}

// DOT -----------------------------------------------------------------------

namespace detail {

inline std::string html_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline constexpr const char* dot_attribute_fill = "#d9d9d9";

/**
 * Graphviz rendering with reduced labeling: each attribute name sits on its
 * attribute concept (shaded cell) and each object name on its object concept
 * (plain cell). Edges run from lower to upper concept with rankdir=BT, so
 * the top concept is drawn at the top.
 */
inline std::string export_dot(const ConceptLattice& lat, const FormalContext& ctx) {
  std::vector<std::vector<std::string>> attr_labels(lat.size());
  std::vector<std::vector<std::string>> obj_labels(lat.size());
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    attr_labels[lat.id_of(attribute_concept(ctx, m))].push_back(ctx.attributes()[m]);
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    obj_labels[lat.id_of(object_concept(ctx, g))].push_back(ctx.objects()[g]);

  std::string out = "digraph lattice {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=circle, width=0.25, label=\"\"];\n";
  for (ConceptId id = 0; id < lat.size(); ++id) {
    out += "  c" + std::to_string(id);
    if (!attr_labels[id].empty() || !obj_labels[id].empty()) {
      out += " [shape=plain, label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\">";
      for (const auto& a : attr_labels[id])
        out += "<TR><TD BGCOLOR=\"" + std::string(dot_attribute_fill) + "\">" + detail::html_escape(a) + "</TD></TR>";
      for (const auto& g : obj_labels[id])
        out += "<TR><TD>" + detail::html_escape(g) + "</TD></TR>";
      out += "</TABLE>>]";
    }
    out += ";\n";
  }
  for (auto [lo, up] : lat.covers())
    out += "  c" + std::to_string(lo) + " -> c" + std::to_string(up) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace fca

#endif  // FCA_EXPORT_HPP
