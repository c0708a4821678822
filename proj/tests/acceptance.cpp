// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fca/oracle.hpp"
#include "support.hpp"

using namespace fca;
using fca::support::all_subsets;
using fca::support::random_context;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string run_cli(const std::string& args, int* status) {
  const std::string cmd = std::string("\"") + FCA_CLI_PATH + "\" " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
    out.append(buf.data(), n);
  *status = pclose(pipe.release());
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome oracle_equality(const FormalContext& ctx, double budget_s) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fast = enumerate_concepts(ctx);
  const auto brute = oracle::brute_force_concepts(ctx);
  const double t = seconds_since(t0);
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> a;
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> b;
  for (const auto& c : fast)
    a.emplace(c.extent.indices(), c.intent.indices());
  for (const auto& c : brute)
    b.emplace(c.extent.indices(), c.intent.indices());
  const bool same = a == b && a.size() == fast.size();
  return {same && t < budget_s, std::to_string(fast.size()) + " concepts, brute force " + std::to_string(brute.size()) +
                                    ", " + std::to_string(t) + " s (budget " + std::to_string(budget_s) + " s)"};
}

Outcome hasse_correctness() {
  std::string detail;
  bool ok = true;
  for (const auto& ctx : {corpus::ninapro_abc(), corpus::ninapro_grasp()}) {
    const auto lat = build_lattice(ctx);
    const auto reference = oracle::pairwise_covers(lat.concepts());
    ok = ok && reference == lat.covers();
    detail += std::to_string(lat.covers().size()) + "/" + std::to_string(reference.size()) + " edges; ";
  }
  return {ok, detail};
}

Outcome top_bottom() {
  const auto abc = corpus::ninapro_abc();
  const auto abc_lat = build_lattice(abc);
  const auto grasp = corpus::ninapro_grasp();
  const auto grasp_lat = build_lattice(grasp);
  const auto& abc_top = abc_lat.concept_at(abc_lat.top());
  const auto& grasp_top = grasp_lat.concept_at(grasp_lat.top());
  const bool ok = abc_top.extent.count() == 19 && abc_top.intent.empty() && grasp_top.extent.count() == 18 &&
                  grasp.names_of_attributes(grasp_top.intent) == std::vector<std::string>{"VF1", "VF2"} &&
                  abc_lat.concept_at(abc_lat.bottom()).extent.empty() &&
                  grasp_lat.concept_at(grasp_lat.bottom()).extent.empty();
  return {ok, "abc top |extent|=" + std::to_string(abc_top.extent.count()) +
                  ", grasp top intent=" + std::to_string(grasp_top.intent.count()) + " attributes"};
}

Outcome sibling_case() {
  const auto ctx = corpus::ninapro_abc();
  const auto lat = build_lattice(ctx);
  const auto fe_intent = ctx.attributes_named({"Flexion", "Extension"});
  const auto parent = lat.find_extent(derive_extent(ctx, fe_intent));
  if (!parent || lat.concept_at(*parent).intent != fe_intent)
    return {false, "no concept with intent exactly {Flexion, Extension}"};
  std::vector<ConceptId> ids;
  for (auto name : {"Ex1 Act1-", "Ex1 Act3-", "Ex1 Act5-", "Ex1 Act7-", "Ex1 Act11-"})
    ids.push_back(lat.id_of(object_concept(ctx, ctx.object_index(name))));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& ups = lat.upper_covers(ids[i]);
    if (!std::binary_search(ups.begin(), ups.end(), *parent))
      return {false, "finger concept " + std::to_string(i) + " not covered by {Flexion, Extension}"};
    const auto sibs = siblings(lat, ids[i]);
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (i != j && !std::binary_search(sibs.begin(), sibs.end(), ids[j]))
        return {false, "concepts " + std::to_string(i) + "," + std::to_string(j) + " are not siblings"};
  }
  const auto reports = corpus::verify_cases();
  return {reports[2].verdict == corpus::Verdict::Holds, "5 finger concepts under node #" + std::to_string(*parent)};
}

Outcome grouping_case() {
  const auto ctx = corpus::ninapro_grasp();
  const auto lat = build_lattice(ctx);
  const std::vector<std::vector<int>> groups{{6, 10, 11, 12, 16}, {1, 4, 15}, {7, 13}, {3, 18}};
  for (const auto& group : groups) {
    std::set<ConceptId> nodes;
    for (int r : group)
      nodes.insert(lat.id_of(object_concept(ctx, ctx.object_index("Ex4 Act r" + std::to_string(r)))));
    if (nodes.size() != 1)
      return {false, "group starting r" + std::to_string(group.front()) + " spans " + std::to_string(nodes.size()) +
                         " nodes"};
  }
  const auto reports = corpus::verify_cases();
  return {reports[3].verdict == corpus::Verdict::Holds, "4 groups each on a single object concept"};
}

Outcome order_cases() {
  // Hand computation straight from the transcribed rows: for object concepts,
  // leq(oc(a), oc(b)) holds iff row(b) is a subset of row(a).
  using S = std::set<std::string>;
  const S ex3_act9{"Index Finger", "Middle Finger", "Ring Finger", "Little Finger", "Thumb", "Extension", "Close", "Wrist"};
  const S ex3_act5{"Flexion", "Extension", "Wrist"};
  const S ex2_act6{"Index Finger", "Middle Finger", "Ring Finger", "Little Finger", "Thumb", "Abduction"};
  const S ex2_act8{"Index Finger", "Middle Finger", "Ring Finger", "Little Finger", "Thumb", "Flexion", "Close"};
  auto subset = [](const S& a, const S& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
  const std::string hand1 = subset(ex3_act5, ex3_act9) ? "holds" : "fails";
  const std::string hand2 = subset(ex2_act8, ex2_act6) ? "holds" : "fails";

  int status = 0;
  const auto out = run_cli("verify-cases --format json", &status);
  if (status != 0)
    return {false, "verify-cases exited with status " + std::to_string(status)};
  const auto doc = nlohmann::json::parse(out);
  if (doc.size() != 4)
    return {false, "expected 4 case reports"};
  const std::string v1 = doc[0]["verdict"];
  const std::string v2 = doc[1]["verdict"];
  const bool evidence = !doc[0]["evidence"].empty() && !doc[1]["evidence"].empty();
  return {v1 == hand1 && v2 == hand2 && evidence && hand1 == "fails" && hand2 == "fails",
          "case 1 " + v1 + " (hand " + hand1 + "), case 2 " + v2 + " (hand " + hand2 + ")"};
}

Outcome property_suites() {
  std::mt19937 rng(20261015);
  constexpr int contexts = 100;
  std::vector<std::string> failures;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok && std::find(failures.begin(), failures.end(), what) == failures.end())
      failures.push_back(what);
  };
  for (int i = 0; i < contexts; ++i) {
    const auto ctx = random_context(rng, 8, 8);
    const auto osub = all_subsets(ctx.object_count());
    const auto asub = all_subsets(ctx.attribute_count());

    for (const auto& a : osub) {
      const auto ai = derive_intent(ctx, a);
      for (const auto& b : asub)
        require(a.is_subset_of(derive_extent(ctx, b)) == b.is_subset_of(ai), "galois");
    }
    for (const auto& b : asub) {
      const auto cb = closure_attributes(ctx, b);
      require(b.is_subset_of(cb), "closure extensive");
      require(closure_attributes(ctx, cb) == cb, "closure idempotent");
      const auto c = b | asub[rng() % asub.size()];
      require(cb.is_subset_of(closure_attributes(ctx, c)), "closure monotone");
    }

    const auto lat = build_lattice(ctx);
    if (lat.size() <= 64) {
      std::vector<std::vector<std::size_t>> d;
      for (ConceptId a = 0; a < lat.size(); ++a)
        d.push_back(distances_from(lat, a));
      for (ConceptId a = 0; a < lat.size(); ++a)
        for (ConceptId b = 0; b < lat.size(); ++b) {
          require((d[a][b] == 0) == (a == b) && d[a][b] == d[b][a], "distance identity/symmetry");
          for (ConceptId c = 0; c < lat.size(); ++c)
            require(d[a][c] <= d[a][b] + d[b][c], "distance triangle");
        }
    }
    for (std::size_t steps = 1; steps <= 2; ++steps)
      for (ConceptId a = 0; a < lat.size(); ++a) {
        const auto up = generalize(lat, a, steps);
        for (ConceptId b = 0; b < lat.size(); ++b) {
          const auto down = specialize(lat, b, steps);
          require(std::binary_search(up.begin(), up.end(), b) == std::binary_search(down.begin(), down.end(), a),
                  "generalize/specialize duality");
        }
      }
    for (const auto& attrs : asub) {
      const auto id = nearest_concept(ctx, lat, attrs);
      for (ConceptId c = 0; c < lat.size(); ++c)
        if (attrs.is_subset_of(lat.concept_at(c).intent))
          require(lat.leq(c, id), "nearest_concept minimality");
      require(attrs.is_subset_of(lat.concept_at(id).intent), "nearest_concept containment");
    }
    const auto p = support::permuted(ctx, support::random_permutation(rng, ctx.object_count()),
                                     support::random_permutation(rng, ctx.attribute_count()));
    require(enumerate_concepts(p).size() == lat.size(), "permutation invariance");
  }
  std::string detail = std::to_string(contexts) + " random contexts up to 8x8";
  for (const auto& f : failures)
    detail += "; FAILED " + f;
  return {failures.empty(), detail};
}

Outcome golden_files() {
  int s1 = 0;
  int s2 = 0;
  int s3 = 0;
  int s4 = 0;
  const bool abc = run_cli("corpus ninapro-abc", &s1) == support::read_file(support::data_path("ninapro_abc.csv"));
  const bool grasp = run_cli("corpus ninapro-grasp", &s2) == support::read_file(support::data_path("ninapro_grasp.csv"));
  const auto j1 = run_cli("lattice ninapro-abc --format json", &s3);
  const auto j2 = run_cli("lattice ninapro-abc --format json", &s4);
  const bool statuses = s1 == 0 && s2 == 0 && s3 == 0 && s4 == 0;
  return {abc && grasp && statuses && !j1.empty() && j1 == j2,
          std::string("abc csv ") + (abc ? "identical" : "differs") + ", grasp csv " + (grasp ? "identical" : "differs") +
              ", lattice json " + (j1 == j2 ? "stable" : "unstable") + " (" + std::to_string(j1.size()) + " bytes)"};
}

Outcome round_trip() {
  bool ok = true;
  for (const auto* file : {"ninapro_abc.csv", "ninapro_grasp.csv"}) {
    const auto text = support::read_file(support::data_path(file));
    const auto ctx = parse_context(text);
    ok = ok && serialize_context(ctx) == text && parse_context(serialize_context(ctx)) == ctx;
  }
  std::mt19937 rng(10);
  for (int i = 0; i < 200; ++i) {
    const auto ctx = random_context(rng, 8, 8);
    ok = ok && parse_context(serialize_context(ctx)) == ctx;
  }
  return {ok, "2 corpus files + 200 random contexts"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 oracle equality, force-pattern context (2^17 subsets, < 10 s)",
       [] { return oracle_equality(corpus::ninapro_abc(), 10.0); }},
      {"AC2 oracle equality, grasp context (2^11 subsets, < 1 s)",
       [] { return oracle_equality(corpus::ninapro_grasp(), 1.0); }},
      {"AC3 Hasse covers equal pairwise transitive reduction", hasse_correctness},
      {"AC4 top and bottom concepts", top_bottom},
      {"AC5 finger flexion/extension siblings", sibling_case},
      {"AC6 duplicate grasp rows share object concepts", grouping_case},
      {"AC7 order cases match hand computation", order_cases},
      {"AC8 property suites", property_suites},
      {"AC9 golden files and byte-stable lattice JSON", golden_files},
      {"AC10 parse/serialize round trip", round_trip},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
