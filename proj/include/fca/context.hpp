#ifndef FCA_CONTEXT_HPP
#define FCA_CONTEXT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fca/bitset.hpp"
#include "fca/error.hpp"

namespace fca {

using ObjectSet = Bitset;
using AttributeSet = Bitset;

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace detail

/// Quality-dimension domain an attribute belongs to.
enum class Domain { Fingers, Wrist, Forces, Grasp };

inline std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::Fingers: return "Fingers";
    case Domain::Wrist: return "Wrist";
    case Domain::Forces: return "Forces";
    case Domain::Grasp: return "Grasp";
  }
  return "";
}

struct AttributeMeta {
  Domain domain_tag;
  friend bool operator==(const AttributeMeta&, const AttributeMeta&) = default;
};

/**
 * A binary formal context: objects, attributes and the incidence relation
 * between them.
 *
 * The incidence is held twice, as one attribute bitset per object (rows) and
 * one object bitset per attribute (columns), so both derivation operators
 * reduce to word-wise intersections. Contexts are immutable once built.
 *
 * Equality compares names, their order and the incidence; attribute metadata
 * is an annotation and does not take part.
 */
class FormalContext {
public:
  using Incidence = std::vector<std::pair<std::size_t, std::size_t>>;

  FormalContext() = default;

  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                const Incidence& incidence, std::map<std::size_t, AttributeMeta> meta = {})
      : objects_(std::move(objects)), attributes_(std::move(attributes)), meta_(std::move(meta)) {
    index_names(objects_, object_index_, "object");
    index_names(attributes_, attribute_index_, "attribute");
    rows_.assign(objects_.size(), Bitset(attributes_.size()));
    cols_.assign(attributes_.size(), Bitset(objects_.size()));
    for (auto [g, m] : incidence) {
      check_object(g);
      check_attribute(m);
      rows_[g].set(m);
      cols_[m].set(g);
    }
    for (const auto& [m, _] : meta_)
      check_attribute(m);
  }

  /// Builds from one attribute set per object; `rows.size()` must match.
  static FormalContext from_rows(std::vector<std::string> objects, std::vector<std::string> attributes,
                                 const std::vector<std::vector<std::size_t>>& rows,
                                 std::map<std::size_t, AttributeMeta> meta = {}) {
    if (rows.size() != objects.size())
      throw Error(Errc::BadIndex, "row count does not match object count");
    Incidence inc;
    for (std::size_t g = 0; g < rows.size(); ++g)
      for (auto m : rows[g])
        inc.emplace_back(g, m);
    return FormalContext(std::move(objects), std::move(attributes), inc, std::move(meta));
  }

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }

  const std::string& object_name(std::size_t g) const {
    check_object(g);
    return objects_[g];
  }
  const std::string& attribute_name(std::size_t m) const {
    check_attribute(m);
    return attributes_[m];
  }

  std::optional<std::size_t> find_object(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    return it == object_index_.end() ? std::nullopt : std::optional(it->second);
  }
  std::optional<std::size_t> find_attribute(std::string_view name) const {
    auto it = attribute_index_.find(std::string(name));
    return it == attribute_index_.end() ? std::nullopt : std::optional(it->second);
  }

  std::size_t object_index(std::string_view name) const {
    if (auto g = find_object(name))
      return *g;
    throw Error(Errc::UnknownName, "unknown object '" + std::string(name) + "'");
  }
  std::size_t attribute_index(std::string_view name) const {
    if (auto m = find_attribute(name))
      return *m;
    throw Error(Errc::UnknownName, "unknown attribute '" + std::string(name) + "'");
  }

  bool incident(std::size_t g, std::size_t m) const {
    check_object(g);
    check_attribute(m);
    return rows_[g].test(m);
  }

  /// Attributes of object g.
  const AttributeSet& row(std::size_t g) const {
    check_object(g);
    return rows_[g];
  }
  /// Objects having attribute m.
  const ObjectSet& column(std::size_t m) const {
    check_attribute(m);
    return cols_[m];
  }

  const std::map<std::size_t, AttributeMeta>& attribute_meta() const noexcept { return meta_; }
  std::optional<AttributeMeta> meta(std::size_t m) const {
    check_attribute(m);
    auto it = meta_.find(m);
    return it == meta_.end() ? std::nullopt : std::optional(it->second);
  }

  ObjectSet no_objects() const { return ObjectSet(objects_.size()); }
  ObjectSet all_objects() const { return ObjectSet(objects_.size(), true); }
  AttributeSet no_attributes() const { return AttributeSet(attributes_.size()); }
  AttributeSet all_attributes() const { return AttributeSet(attributes_.size(), true); }

  void check_objects(const ObjectSet& s) const {
    if (s.universe() != objects_.size())
      throw Error(Errc::BadIndex, "object set universe " + std::to_string(s.universe()) +
                                      " does not match context with " + std::to_string(objects_.size()) +
                                      " objects");
  }
  void check_attributes(const AttributeSet& s) const {
    if (s.universe() != attributes_.size())
      throw Error(Errc::BadIndex, "attribute set universe " + std::to_string(s.universe()) +
                                      " does not match context with " + std::to_string(attributes_.size()) +
                                      " attributes");
  }

  ObjectSet object_set(const std::vector<std::size_t>& indices) const {
    for (auto g : indices)
      check_object(g);
    return ObjectSet::from_indices(objects_.size(), indices);
  }
  AttributeSet attribute_set(const std::vector<std::size_t>& indices) const {
    for (auto m : indices)
      check_attribute(m);
    return AttributeSet::from_indices(attributes_.size(), indices);
  }

  ObjectSet objects_named(const std::vector<std::string>& names) const {
    ObjectSet s = no_objects();
    for (const auto& n : names)
      s.set(object_index(n));
    return s;
  }
  AttributeSet attributes_named(const std::vector<std::string>& names) const {
    AttributeSet s = no_attributes();
    for (const auto& n : names)
      s.set(attribute_index(n));
    return s;
  }

  std::vector<std::string> names_of_objects(const ObjectSet& s) const {
    check_objects(s);
    std::vector<std::string> out;
    s.for_each([&](std::size_t g) { out.push_back(objects_[g]); });
    return out;
  }
  std::vector<std::string> names_of_attributes(const AttributeSet& s) const {
    check_attributes(s);
    std::vector<std::string> out;
    s.for_each([&](std::size_t m) { out.push_back(attributes_[m]); });
    return out;
  }

  void check_object(std::size_t g) const {
    if (g >= objects_.size())
      throw Error(Errc::BadIndex, "object index " + std::to_string(g) + " out of range");
  }
  void check_attribute(std::size_t m) const {
    if (m >= attributes_.size())
      throw Error(Errc::BadIndex, "attribute index " + std::to_string(m) + " out of range");
  }

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

private:
  static void index_names(const std::vector<std::string>& names,
                          std::unordered_map<std::string, std::size_t>& index, const char* kind) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& n = names[i];
      if (n.empty())
        throw Error(Errc::MissingName, std::string("empty ") + kind + " name");
      if (n.find_first_of(",\n") != std::string::npos || detail::trim(n) != n)
        throw Error(Errc::InvalidName, std::string(kind) + " name '" + n + "' has a comma, newline or edge whitespace");
      if (!index.emplace(n, i).second)
        throw Error(Errc::DuplicateName, std::string("duplicate ") + kind + " name '" + n + "'");
    }
  }

  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> cols_;
  std::map<std::size_t, AttributeMeta> meta_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> attribute_index_;
};

// Derivation operators ------------------------------------------------------

/// Attributes shared by every object in `objs`. The empty set derives to all
/// attributes.
inline AttributeSet derive_intent(const FormalContext& ctx, const ObjectSet& objs) {
  ctx.check_objects(objs);
  AttributeSet out = ctx.all_attributes();
  objs.for_each([&](std::size_t g) { out &= ctx.row(g); });
  return out;
}

/// Objects having every attribute in `attrs`. The empty set derives to all
/// objects.
inline ObjectSet derive_extent(const FormalContext& ctx, const AttributeSet& attrs) {
  ctx.check_attributes(attrs);
  ObjectSet out = ctx.all_objects();
  attrs.for_each([&](std::size_t m) { out &= ctx.column(m); });
  return out;
}

inline AttributeSet closure_attributes(const FormalContext& ctx, const AttributeSet& attrs) {
  return derive_intent(ctx, derive_extent(ctx, attrs));
}

inline ObjectSet closure_objects(const FormalContext& ctx, const ObjectSet& objs) {
  return derive_extent(ctx, derive_intent(ctx, objs));
}

// CSV format ----------------------------------------------------------------


/**
 * Parses the context CSV format:
 *
 *     ,attr1,attr2,...
 *     obj1,0,1,...
 *
 * The corner cell must be empty. Cells are trimmed and must then read "0" or
 * "1". A single trailing LF is accepted; every other line is a row.
 */
inline FormalContext parse_context(std::string_view text) {
  if (text.empty())
    throw ParseError(Errc::MissingHeader, "empty input, expected attribute header");
  if (text.back() == '\n')
    text.remove_suffix(1);
  const auto lines = detail::split(text, '\n');

  const auto header = detail::split(lines[0], ',');
  if (!detail::trim(header[0]).empty())
    throw ParseError(Errc::MalformedCell, "corner cell must be empty", 1, 1);
  std::vector<std::string> attributes;
  for (std::size_t c = 1; c < header.size(); ++c) {
    const auto name = detail::trim(header[c]);
    if (name.empty())
      throw ParseError(Errc::MissingName, "empty attribute name", 1, c + 1);
    if (std::find(attributes.begin(), attributes.end(), name) != attributes.end())
      throw ParseError(Errc::DuplicateName, "duplicate attribute name '" + std::string(name) + "'", 1, c + 1);
    attributes.emplace_back(name);
  }

  std::vector<std::string> objects;
  std::unordered_set<std::string_view> seen_objects;
  FormalContext::Incidence incidence;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = detail::split(lines[r], ',');
    if (cells.size() != header.size())
      throw ParseError(Errc::RaggedRow,
                       "expected " + std::to_string(header.size()) + " cells, found " +
                           std::to_string(cells.size()),
                       r + 1);
    const auto name = detail::trim(cells[0]);
    if (name.empty())
      throw ParseError(Errc::MissingName, "empty object name", r + 1, 1);
    if (!seen_objects.insert(name).second)
      throw ParseError(Errc::DuplicateName, "duplicate object name '" + std::string(name) + "'", r + 1, 1);
    const auto g = objects.size();
    objects.emplace_back(name);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const auto v = detail::trim(cells[c]);
      if (v == "1")
        incidence.emplace_back(g, c - 1);
      else if (v != "0")
        throw ParseError(Errc::MalformedCell, "cell '" + std::string(v) + "' is not 0 or 1", r + 1, c + 1);
    }
  }

  return FormalContext(std::move(objects), std::move(attributes), incidence);
}

inline std::string serialize_context(const FormalContext& ctx) {
  std::string out;
  for (const auto& a : ctx.attributes()) {
    out += ',';
    out += a;
  }
  out += '\n';
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    out += ctx.objects()[g];
    const auto& row = ctx.row(g);
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      out += ',';
      out += row.test(m) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace fca

#endif  // FCA_CONTEXT_HPP
