// Walk through the grasp context: build the lattice, look up a category,
// move up and down the hierarchy, and pick a prototype.

#include <iostream>

#include "fca/fca.hpp"

namespace {

void print(const fca::FormalContext& ctx, const fca::FormalConcept& c) {
  std::cout << "  {";
  const char* sep = "";
  for (const auto& n : ctx.names_of_objects(c.extent)) {
    std::cout << sep << n;
    sep = ", ";
  }
  std::cout << "} x {";
  sep = "";
  for (const auto& n : ctx.names_of_attributes(c.intent)) {
    std::cout << sep << n;
    sep = ", ";
  }
  std::cout << "}\n";
}

}  // namespace

int main() {
  const auto ctx = fca::corpus::ninapro_grasp();
  const auto lattice = fca::build_lattice(ctx);
  std::cout << ctx.object_count() << " grasps, " << ctx.attribute_count() << " attributes -> " << lattice.size()
            << " concepts, height " << lattice.height() << "\n";

  const auto category = ctx.attributes_named({"Power", "Palm"});
  const auto id = fca::nearest_concept(ctx, lattice, category);
  std::cout << "category Power+Palm:\n";
  print(ctx, lattice.concept_at(id));

  std::cout << "one step more general:\n";
  for (auto up : fca::generalize(lattice, id, 1))
    print(ctx, lattice.concept_at(up));
  std::cout << "one step more specific:\n";
  for (auto down : fca::specialize(lattice, id, 1))
    print(ctx, lattice.concept_at(down));

  const auto best = fca::prototype(ctx, category);
  std::cout << "prototype: " << ctx.objects()[best] << "\n";

  std::cout << "closest to " << ctx.objects()[best] << ":\n";
  for (const auto& r : fca::similar_to_object(ctx, lattice, best, 3))
    std::cout << "  #" << r.concept_id << " distance " << r.lattice_distance << ", jaccard " << r.intent_jaccard.num
              << "/" << r.intent_jaccard.den << "\n";
}
