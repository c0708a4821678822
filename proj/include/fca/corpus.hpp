#ifndef FCA_CORPUS_HPP
#define FCA_CORPUS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fca/similarity.hpp"

namespace fca::corpus {

namespace detail {

// Rows are written as 0/1 strings in attribute order so they can be checked
// against the printed tables column by column.
inline FormalContext from_bit_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                                   const std::vector<std::string_view>& rows,
                                   std::map<std::size_t, AttributeMeta> meta) {
  FormalContext::Incidence inc;
  for (std::size_t g = 0; g < rows.size(); ++g)
    for (std::size_t m = 0; m < rows[g].size(); ++m)
      if (rows[g][m] == '1')
        inc.emplace_back(g, m);
  return FormalContext(std::move(objects), std::move(attributes), inc, std::move(meta));
}

}  // namespace detail

/// Force-pattern table for the finger, hand and wrist exercises (19 x 17).
inline FormalContext ninapro_abc() {
  std::vector<std::string> attributes{
      "Index Finger", "Middle Finger", "Ring Finger", "Little Finger", "Thumb",  "Abduction",
      "Flexion",      "Extension",     "Adduction",   "Up",            "Flexed over", "Opposing base",
      "Point",        "Close",         "Wrist",       "Rotate",        "Deviation"};
  std::map<std::size_t, AttributeMeta> meta;
  for (std::size_t m = 0; m < attributes.size(); ++m) {
    Domain d = Domain::Forces;
    if (m < 5)
      d = Domain::Fingers;
    else if (m >= 14)
      d = Domain::Wrist;
    meta.emplace(m, AttributeMeta{d});
  }
  std::vector<std::string> objects{
      "Ex1 Act1-", "Ex1 Act3-", "Ex1 Act5-", "Ex1 Act7-", "Ex1 Act9-", "Ex1 Act11-", "Ex2 Act1",
      "Ex2 Act2",  "Ex2 Act3",  "Ex2 Act4",  "Ex2 Act5",  "Ex2 Act6",  "Ex2 Act7",   "Ex2 Act8",
      "Ex3 Act1-", "Ex3 Act3-", "Ex3 Act5-", "Ex3 Act7-", "Ex3 Act9"};
  //                                   IMRLT AFEAU FOPC WRD
  const std::vector<std::string_view> rows{
      "10000011000000000",  // Ex1 Act1-
      "01000011000000000",  // Ex1 Act3-
      "00100011000000000",  // Ex1 Act5-
      "00010011000000000",  // Ex1 Act7-
      "00001100100000000",  // Ex1 Act9-
      "00001011000000000",  // Ex1 Act11-
      "00001000010000000",  // Ex2 Act1
      "01011010001000000",  // Ex2 Act2
      "00110010000000000",  // Ex2 Act3
      "00011000000100000",  // Ex2 Act4
      "11111010000000000",  // Ex2 Act5
      "11111100000000000",  // Ex2 Act6
      "10000000000010000",  // Ex2 Act7
      "11111010000001000",  // Ex2 Act8
      "01000000000000110",  // Ex3 Act1-
      "00010000000000110",  // Ex3 Act3-
      "00000011000000100",  // Ex3 Act5-
      "00000000000000101",  // Ex3 Act7-
      "11111001000001100",  // Ex3 Act9
  };
  return detail::from_bit_rows(std::move(objects), std::move(attributes), rows, std::move(meta));
}

/// Grasp-taxonomy table for the grasping exercise (18 x 11). Row labels are
/// truncated in the source, so rows are named r1..r18 in order.
inline FormalContext ninapro_grasp() {
  std::vector<std::string> attributes{"Power", "Intermediate", "Precision", "Pad",       "Palm",     "Side",
                                      "VF1",   "VF2",          "VF3",       "Abduction", "Adduction"};
  std::map<std::size_t, AttributeMeta> meta;
  for (std::size_t m = 0; m < attributes.size(); ++m)
    meta.emplace(m, AttributeMeta{m >= 9 ? Domain::Forces : Domain::Grasp});
  std::vector<std::string> objects;
  for (int r = 1; r <= 18; ++r)
    objects.push_back("Ex4 Act r" + std::to_string(r));
  //                                   PIPPPS VVV AA
  const std::vector<std::string_view> rows{
      "10001011010", "10001011001", "10001011101", "10001011010", "10010011010", "00110011010",
      "01000111001", "00100111010", "10111011010", "00110011010", "00110011010", "00110011010",
      "01000111001", "00110011001", "10001011010", "00110011010", "01000111010", "10001011101",
  };
  return detail::from_bit_rows(std::move(objects), std::move(attributes), rows, std::move(meta));
}

/// Corpus lookup by CLI name ("ninapro-abc", "ninapro-grasp").
inline std::optional<FormalContext> by_name(std::string_view name) {
  if (name == "ninapro-abc")
    return ninapro_abc();
  if (name == "ninapro-grasp")
    return ninapro_grasp();
  return std::nullopt;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"ninapro-abc", "ninapro-grasp"};
  return n;
}

// Similarity cases -----------------------------------------------------------

enum class Verdict { Holds, Fails, NotMappable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotMappable: return "not-mappable";
  }
  return "";
}

struct Evidence {
  std::string role;
  ConceptId concept_id;
  std::vector<std::string> extent;
  std::vector<std::string> intent;
};

struct CaseReport {
  int case_id;
  std::string claim;
  std::string relation;  // what was tested
  Verdict verdict;
  std::vector<Evidence> evidence;
};

namespace detail {

inline Evidence evidence(const FormalContext& ctx, const ConceptLattice& lat, std::string role, ConceptId id) {
  const auto& c = lat.concept_at(id);
  return {std::move(role), id, ctx.names_of_objects(c.extent), ctx.names_of_attributes(c.intent)};
}

inline ConceptId object_node(const FormalContext& ctx, const ConceptLattice& lat, std::string_view name) {
  return lat.id_of(object_concept(ctx, ctx.object_index(name)));
}

inline Verdict verdict(bool b) { return b ? Verdict::Holds : Verdict::Fails; }

}  // namespace detail

/**
 * Recomputes the four similarity cases on the corpus lattices:
 *   1. the wrist-extension object concept lies above the wrist-extension
 *      with closed hand one;
 *   2. the all-finger abduction object concept lies below the closed-hand
 *      one;
 *   3. the five finger flexion/extension object concepts are siblings under
 *      the concept with intent {Flexion, Extension};
 *   4. some distinct grasp rows collapse onto one shared object concept.
 */
inline std::vector<CaseReport> verify_cases() {
  const FormalContext abc = ninapro_abc();
  const ConceptLattice abc_lat = build_lattice(abc);
  const FormalContext grasp = ninapro_grasp();
  const ConceptLattice grasp_lat = build_lattice(grasp);
  using detail::evidence;
  using detail::object_node;
  std::vector<CaseReport> out;

  {
    const auto act9 = object_node(abc, abc_lat, "Ex3 Act9");
    const auto act5 = object_node(abc, abc_lat, "Ex3 Act5-");
    out.push_back({1, "wrist extension gesture Ex3 Act9 sits below the Ex3 Act5- concept",
                   "leq(object_concept(Ex3 Act9), object_concept(Ex3 Act5-))",
                   detail::verdict(leq(abc_lat.ref(act9), abc_lat.ref(act5))),
                   {evidence(abc, abc_lat, "subconcept", act9), evidence(abc, abc_lat, "superconcept", act5)}});
  }
  {
    const auto act6 = object_node(abc, abc_lat, "Ex2 Act6");
    const auto act8 = object_node(abc, abc_lat, "Ex2 Act8");
    out.push_back({2, "hand abduction Ex2 Act6 sits below the closing gesture Ex2 Act8",
                   "leq(object_concept(Ex2 Act6), object_concept(Ex2 Act8))",
                   detail::verdict(leq(abc_lat.ref(act6), abc_lat.ref(act8))),
                   {evidence(abc, abc_lat, "subconcept", act6), evidence(abc, abc_lat, "superconcept", act8)}});
  }
  {
    const std::vector<std::string_view> fingers{"Ex1 Act1-", "Ex1 Act3-", "Ex1 Act5-", "Ex1 Act7-", "Ex1 Act11-"};
    const auto parent = nearest_concept(abc, abc_lat, abc.attributes_named({"Flexion", "Extension"}));
    const bool parent_exact = abc_lat.concept_at(parent).intent == abc.attributes_named({"Flexion", "Extension"});
    CaseReport rep{3, "single-finger flexion/extension gestures of exercise 1 are siblings",
                   "pairwise siblings sharing the upper cover with intent {Flexion, Extension}", Verdict::Holds, {}};
    rep.evidence.push_back(evidence(abc, abc_lat, "shared upper cover", parent));
    std::vector<ConceptId> ids;
    for (auto f : fingers)
      ids.push_back(object_node(abc, abc_lat, f));
    bool holds = parent_exact;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      rep.evidence.push_back(evidence(abc, abc_lat, "sibling", ids[i]));
      const auto& ups = abc_lat.upper_covers(ids[i]);
      holds = holds && std::find(ups.begin(), ups.end(), parent) != ups.end();
      const auto sibs = siblings(abc_lat, ids[i]);
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (j != i)
          holds = holds && ids[i] != ids[j] && std::binary_search(sibs.begin(), sibs.end(), ids[j]);
    }
    rep.verdict = detail::verdict(holds);
    out.push_back(std::move(rep));
  }
  {
    CaseReport rep{4, "grasps with identical force rows collapse onto one concept",
                   "distinct grasp rows grouped under one shared object concept", Verdict::Fails, {}};
    std::map<ConceptId, std::size_t> rows_per_node;
    for (std::size_t g = 0; g < grasp.object_count(); ++g)
      ++rows_per_node[grasp_lat.id_of(object_concept(grasp, g))];
    for (auto [id, n] : rows_per_node)
      if (n >= 2) {
        rep.evidence.push_back(evidence(grasp, grasp_lat, "shared object concept", id));
        rep.verdict = Verdict::Holds;
      }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace fca::corpus

#endif  // FCA_CORPUS_HPP
