#ifndef FCA_TESTS_SUPPORT_HPP
#define FCA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fca/fca.hpp"

namespace fca::support {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string data_path(const std::string& name) { return std::string(FCA_DATA_DIR) + "/" + name; }

/// Random context with |G| in [0, max_objects] and |M| in [0, max_attributes].
inline FormalContext random_context(std::mt19937& rng, std::size_t max_objects, std::size_t max_attributes,
                                    double density = -1.0) {
  std::uniform_int_distribution<std::size_t> go(0, max_objects);
  std::uniform_int_distribution<std::size_t> ma(0, max_attributes);
  const std::size_t n_obj = go(rng);
  const std::size_t n_att = ma(rng);
  const double p = density >= 0 ? density : std::uniform_real_distribution<double>(0.1, 0.9)(rng);
  std::bernoulli_distribution cell(p);
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  for (std::size_t g = 0; g < n_obj; ++g)
    objects.push_back("g" + std::to_string(g + 1));
  for (std::size_t m = 0; m < n_att; ++m)
    attributes.push_back("m" + std::to_string(m + 1));
  FormalContext::Incidence inc;
  for (std::size_t g = 0; g < n_obj; ++g)
    for (std::size_t m = 0; m < n_att; ++m)
      if (cell(rng))
        inc.emplace_back(g, m);
  return FormalContext(std::move(objects), std::move(attributes), inc);
}

/// Same relation with rows and columns reordered by the given permutations.
inline FormalContext permuted(const FormalContext& ctx, const std::vector<std::size_t>& obj_perm,
                              const std::vector<std::size_t>& att_perm) {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  for (auto g : obj_perm)
    objects.push_back(ctx.objects()[g]);
  for (auto m : att_perm)
    attributes.push_back(ctx.attributes()[m]);
  FormalContext::Incidence inc;
  for (std::size_t i = 0; i < obj_perm.size(); ++i)
    for (std::size_t j = 0; j < att_perm.size(); ++j)
      if (ctx.incident(obj_perm[i], att_perm[j]))
        inc.emplace_back(i, j);
  return FormalContext(std::move(objects), std::move(attributes), inc);
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// All subsets of an n-element universe, n small.
inline std::vector<Bitset> all_subsets(std::size_t n) {
  std::vector<Bitset> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U)
        b.set(i);
    out.push_back(std::move(b));
  }
  return out;
}

inline std::vector<std::string> objs(const FormalContext& ctx, const Bitset& s) { return ctx.names_of_objects(s); }
inline std::vector<std::string> atts(const FormalContext& ctx, const Bitset& s) {
  return ctx.names_of_attributes(s);
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace fca::support

#endif  // FCA_TESTS_SUPPORT_HPP
