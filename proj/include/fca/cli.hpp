#ifndef FCA_CLI_HPP
#define FCA_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fca/corpus.hpp"
#include "fca/export.hpp"
#include "fca/oracle.hpp"
#include "fca/similarity.hpp"

namespace fca::cli {

enum ExitCode : int { Ok = 0, Usage = 1, ContextError = 2, QueryError = 3 };

inline constexpr std::size_t default_k = 5;
inline constexpr std::size_t default_steps = 1;

namespace detail {

using ojson = nlohmann::ordered_json;

/// Reads a context from a corpus name or a CSV path.
inline FormalContext load_context(const std::string& source) {
  if (auto c = corpus::by_name(source))
    return *c;
  std::ifstream in(source, std::ios::binary);
  if (!in)
    throw ParseError(Errc::MissingHeader, "cannot read context file '" + source + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_context(text);
}

inline std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  if (fca::detail::trim(list).empty())
    return out;
  for (auto part : fca::detail::split(list, ','))
    out.emplace_back(fca::detail::trim(part));
  return out;
}

inline std::string join(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i)
    s += (i ? ", " : "") + names[i];
  return s + "}";
}

inline std::string ratio_text(Ratio r) {
  const auto d = std::gcd(r.num, r.den);
  return d == 0 ? "0/1" : std::to_string(r.num / d) + "/" + std::to_string(r.den / d);
}

inline ojson concept_json(const FormalContext& ctx, const ConceptLattice* lat, ConceptId id, const FormalConcept& c) {
  ojson j;
  j["id"] = id;
  j["extent"] = ctx.names_of_objects(c.extent);
  j["intent"] = ctx.names_of_attributes(c.intent);
  if (lat)
    j["level"] = lat->level_of(id);
  return j;
}

inline std::string concept_line(const FormalContext& ctx, const ConceptLattice* lat, ConceptId id,
                                const FormalConcept& c) {
  std::ostringstream s;
  s << "#" << id;
  if (lat)
    s << "  level " << lat->level_of(id);
  s << "  intent " << join(ctx.names_of_attributes(c.intent)) << "  extent "
    << join(ctx.names_of_objects(c.extent));
  return s.str();
}

inline void print_concepts(std::ostream& out, const std::string& format, const FormalContext& ctx,
                           const ConceptLattice& lat, const std::vector<ConceptId>& ids) {
  if (format == "json") {
    auto arr = ojson::array();
    for (auto id : ids)
      arr.push_back(concept_json(ctx, &lat, id, lat.concept_at(id)));
    out << arr.dump() << "\n";
  } else {
    for (auto id : ids)
      out << concept_line(ctx, &lat, id, lat.concept_at(id)) << "\n";
  }
}

inline void print_cases(std::ostream& out, const std::string& format) {
  const auto reports = corpus::verify_cases();
  if (format == "json") {
    auto arr = ojson::array();
    for (const auto& r : reports) {
      ojson j;
      j["case"] = r.case_id;
      j["claim"] = r.claim;
      j["relation"] = r.relation;
      j["verdict"] = corpus::to_string(r.verdict);
      auto ev = ojson::array();
      for (const auto& e : r.evidence) {
        ojson k;
        k["role"] = e.role;
        k["id"] = e.concept_id;
        k["extent"] = e.extent;
        k["intent"] = e.intent;
        ev.push_back(std::move(k));
      }
      j["evidence"] = std::move(ev);
      arr.push_back(std::move(j));
    }
    out << arr.dump() << "\n";
    return;
  }
  for (const auto& r : reports) {
    out << "Case " << r.case_id << ": " << corpus::to_string(r.verdict) << "\n";
    out << "  claim:    " << r.claim << "\n";
    out << "  relation: " << r.relation << "\n";
    for (const auto& e : r.evidence)
      out << "  " << e.role << " #" << e.concept_id << " intent " << join(e.intent) << " extent "
          << join(e.extent) << "\n";
  }
}

/// Structural self-check of a context's lattice. Returns the failed checks.
inline std::vector<std::string> validate(const FormalContext& ctx, bool with_oracle, std::ostream& out) {
  std::vector<std::string> failed;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "ok    " : "FAIL  ") << name << "\n";
    if (!ok)
      failed.push_back(name);
  };
  const ConceptLattice lat = build_lattice(ctx);
  check("concepts are closed pairs", std::all_of(lat.concepts().begin(), lat.concepts().end(),
                                                 [&](const FormalConcept& c) { return is_closed_pair(ctx, c); }));
  check("top extent is every object and bottom intent every attribute",
        lat.concept_at(lat.top()).extent.full() && lat.concept_at(lat.bottom()).intent.full());
  std::size_t roots = 0;
  std::size_t leaves = 0;
  for (ConceptId id = 0; id < lat.size(); ++id) {
    roots += lat.upper_covers(id).empty() ? 1 : 0;
    leaves += lat.lower_covers(id).empty() ? 1 : 0;
  }
  check("exactly one maximal and one minimal concept", roots == 1 && leaves == 1);
  check("covers equal pairwise transitive reduction", oracle::pairwise_covers(lat.concepts()) == lat.covers());
  if (with_oracle) {
    if (ctx.attribute_count() > oracle::max_brute_force_attributes)
      check("enumeration equals brute force (too many attributes)", false);
    else
      check("enumeration equals brute force over all attribute subsets",
            oracle::brute_force_concepts(ctx) == lat.concepts());
  }
  out << lat.size() << " concepts, " << lat.covers().size() << " cover edges\n";
  return failed;
}

}  // namespace detail

/**
 * Runs one `fca` command. `args` excludes the program name. Machine output
 * goes to `out`, diagnostics to `err`.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Formal concept analysis over binary object x attribute contexts", "fca"};
  app.require_subcommand(1, 1);

  std::string source;
  std::string format = "table";
  std::string attributes;
  std::string object;
  std::size_t k = default_k;
  std::size_t steps = default_steps;
  bool up = false;
  bool down = false;
  bool with_oracle = false;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_context = [&](CLI::App* sub) {
    sub->add_option("context", source, "Context CSV path or corpus name (ninapro-abc, ninapro-grasp)")->required();
  };

  auto* concepts_cmd = app.add_subcommand("concepts", "List all formal concepts");
  add_context(concepts_cmd);
  add_format(concepts_cmd, {"table", "json"});

  auto* lattice_cmd = app.add_subcommand("lattice", "Build the concept lattice");
  add_context(lattice_cmd);
  add_format(lattice_cmd, {"table", "json", "dot"});

  auto* query_cmd = app.add_subcommand("query", "Most specific concept containing the given attributes");
  add_context(query_cmd);
  query_cmd->add_option("--attributes", attributes, "Comma-separated attribute names")->required();
  query_cmd->add_flag("--generalize", up, "Also list concepts reached upward");
  query_cmd->add_flag("--specialize", down, "Also list concepts reached downward");
  query_cmd->add_option("--steps", steps, "Cover steps for --generalize/--specialize")->capture_default_str();
  add_format(query_cmd, {"table", "json"});

  auto* similar_cmd = app.add_subcommand("similar", "Concepts nearest to an object's concept");
  add_context(similar_cmd);
  similar_cmd->add_option("--object", object, "Object name")->required();
  similar_cmd->add_option("-k", k, "Number of results")->capture_default_str()->check(CLI::PositiveNumber);
  add_format(similar_cmd, {"table", "json"});

  auto* siblings_cmd = app.add_subcommand("siblings", "Concepts sharing an upper cover with an object's concept");
  add_context(siblings_cmd);
  siblings_cmd->add_option("--object", object, "Object name")->required();
  add_format(siblings_cmd, {"table", "json"});

  auto* prototype_cmd = app.add_subcommand("prototype", "Most representative object of an attribute category");
  add_context(prototype_cmd);
  prototype_cmd->add_option("--attributes", attributes, "Comma-separated attribute names")->required();
  add_format(prototype_cmd, {"table", "json"});

  auto* corpus_cmd = app.add_subcommand("corpus", "Print a bundled context as CSV");
  corpus_cmd->add_option("name", source, "Corpus name")->required()->check(CLI::IsMember(corpus::names()));

  auto* cases_cmd = app.add_subcommand("verify-cases", "Recompute the similarity cases on the corpus");
  add_format(cases_cmd, {"table", "json"});

  auto* validate_cmd = app.add_subcommand("validate", "Check lattice invariants for a context");
  add_context(validate_cmd);
  validate_cmd->add_flag("--oracle", with_oracle, "Compare enumeration with exhaustive closure");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (corpus_cmd->parsed()) {
      out << serialize_context(*corpus::by_name(source));
      return Ok;
    }
    if (cases_cmd->parsed()) {
      print_cases(out, format);
      return Ok;
    }

    const FormalContext ctx = load_context(source);

    if (concepts_cmd->parsed()) {
      const auto cs = enumerate_concepts(ctx);
      if (format == "json") {
        auto arr = ojson::array();
        for (ConceptId id = 0; id < cs.size(); ++id)
          arr.push_back(concept_json(ctx, nullptr, id, cs[id]));
        out << arr.dump() << "\n";
      } else {
        for (ConceptId id = 0; id < cs.size(); ++id)
          out << concept_line(ctx, nullptr, id, cs[id]) << "\n";
      }
      return Ok;
    }

    if (validate_cmd->parsed())
      return validate(ctx, with_oracle, out).empty() ? Ok : QueryError;

    const ConceptLattice lat = build_lattice(ctx);

    if (lattice_cmd->parsed()) {
      if (format == "json") {
        out << export_json(lat, ctx);
      } else if (format == "dot") {
        out << export_dot(lat, ctx);
      } else {
        for (ConceptId id = 0; id < lat.size(); ++id) {
          out << concept_line(ctx, &lat, id, lat.concept_at(id)) << "  up [";
          const auto& ups = lat.upper_covers(id);
          for (std::size_t i = 0; i < ups.size(); ++i)
            out << (i ? " " : "") << ups[i];
          out << "]\n";
        }
      }
      return Ok;
    }

    if (query_cmd->parsed()) {
      const ConceptId id = nearest_concept(ctx, lat, ctx.attributes_named(split_names(attributes)));
      std::vector<ConceptId> gen = up ? generalize(lat, id, steps) : std::vector<ConceptId>{};
      std::vector<ConceptId> spec = down ? specialize(lat, id, steps) : std::vector<ConceptId>{};
      if (format == "json") {
        ojson j = concept_json(ctx, &lat, id, lat.concept_at(id));
        auto ids = [&](const std::vector<ConceptId>& v) {
          auto arr = ojson::array();
          for (auto c : v)
            arr.push_back(concept_json(ctx, &lat, c, lat.concept_at(c)));
          return arr;
        };
        if (up)
          j["generalizations"] = ids(gen);
        if (down)
          j["specializations"] = ids(spec);
        out << j.dump() << "\n";
      } else {
        out << concept_line(ctx, &lat, id, lat.concept_at(id)) << "\n";
        for (auto c : gen)
          out << "  up   " << concept_line(ctx, &lat, c, lat.concept_at(c)) << "\n";
        for (auto c : spec)
          out << "  down " << concept_line(ctx, &lat, c, lat.concept_at(c)) << "\n";
      }
      return Ok;
    }

    if (similar_cmd->parsed()) {
      const auto results = similar_to_object(ctx, lat, ctx.object_index(object), k);
      if (format == "json") {
        auto arr = ojson::array();
        for (const auto& r : results) {
          ojson j = concept_json(ctx, &lat, r.concept_id, lat.concept_at(r.concept_id));
          j["distance"] = r.lattice_distance;
          j["jaccard"] = ratio_text(r.intent_jaccard);
          arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
      } else {
        for (const auto& r : results)
          out << "d=" << r.lattice_distance << "  jaccard=" << ratio_text(r.intent_jaccard) << "  "
              << concept_line(ctx, &lat, r.concept_id, lat.concept_at(r.concept_id)) << "\n";
      }
      return Ok;
    }

    if (siblings_cmd->parsed()) {
      const ConceptId id = lat.id_of(object_concept(ctx, ctx.object_index(object)));
      print_concepts(out, format, ctx, lat, siblings(lat, id));
      return Ok;
    }

    if (prototype_cmd->parsed()) {
      const auto category = ctx.attributes_named(split_names(attributes));
      const auto g = prototype(ctx, category);
      const auto closed = closure_attributes(ctx, category);
      if (format == "json") {
        ojson j;
        j["prototype"] = ctx.objects()[g];
        j["category"] = ctx.names_of_attributes(category);
        j["closure"] = ctx.names_of_attributes(closed);
        j["jaccard"] = ratio_text(jaccard(ctx.row(g), closed));
        out << j.dump() << "\n";
      } else {
        out << ctx.objects()[g] << "\n";
      }
      return Ok;
    }
  } catch (const ParseError& e) {
    err << "fca: " << e.what() << "\n";
    return ContextError;
  } catch (const Error& e) {
    err << "fca: " << e.what() << "\n";
    return QueryError;
  }
  return Usage;
}

}  // namespace fca::cli

#endif  // FCA_CLI_HPP
