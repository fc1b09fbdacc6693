#ifndef BREDON_TESTS_RANDOM_COMPLEX_HPP
#define BREDON_TESTS_RANDOM_COMPLEX_HPP

// Randomized valid complexes for the UCT property suite: up to three orbits
// per dimension, stabilizers among {1, C2, C4, C6}, random signs and
// coefficients. Every candidate is post-validated (d.d = 0 under constant and
// representation-ring coefficients) and discarded on failure, never repaired.

#include <numeric>
#include <random>
#include <string>

#include "bredon/complex.hpp"
#include "bredon/homology.hpp"

namespace bredon_tests {

inline bredon::GroupPtr cyclic_group(int n) {
  std::vector<long> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  images.back() = 0;
  std::vector<std::vector<long>> gens;
  if (n > 1) gens.push_back(images);
  return std::make_shared<bredon::FiniteGroup>(bredon::close_permutation_group(
      gens, static_cast<std::size_t>(n), 200, "C" + std::to_string(n)));
}

inline bredon::EquivariantCellComplex random_complex(std::uint32_t seed) {
  std::mt19937 rng(seed);
  static const int orders[] = {1, 2, 4, 6};

  for (;;) {
    bredon::EquivariantCellComplex x;
    x.name = "random" + std::to_string(seed);
    for (int o : orders) {
      std::string nm = "C" + std::to_string(o);
      x.group_order.push_back(nm);
      x.groups.emplace(nm, cyclic_group(o));
    }

    int dim = static_cast<int>(rng() % 3);
    std::vector<std::vector<const bredon::CellOrbit*>> by_dim;
    for (int d = 0; d <= dim; ++d) {
      int count = static_cast<int>(rng() % 3) + (d == dim ? 1 : 0);
      for (int i = 0; i < count; ++i) {
        bredon::CellOrbit c;
        c.id = "c" + std::to_string(d) + "_" + std::to_string(i);
        c.dim = d;
        int o = orders[rng() % 4];
        c.stabilizer_name = "C" + std::to_string(o);
        c.stabilizer = x.groups.at(c.stabilizer_name);
        x.cells.push_back(std::move(c));
      }
    }

    auto random_hom = [&](const bredon::GroupPtr& src,
                          const bredon::GroupPtr& dst) -> bredon::GroupHomomorphism {
      // cyclic source: send the generator to a random element of equal order
      if (src->order() == 1) {
        bredon::GroupHomomorphism h{src, dst, {0}};
        return h;
      }
      std::vector<int> candidates;
      for (int e = 0; e < static_cast<int>(dst->order()); ++e)
        if (dst->element_order(e) == static_cast<int>(src->order())) candidates.push_back(e);
      int img = candidates[rng() % candidates.size()];
      auto h = bredon::homomorphism_from_generator_images(src, dst, {img});
      return *h;
    };

    bool cancel_pairs = (rng() % 2) == 0;
    for (int d = 1; d <= dim; ++d) {
      for (const auto* from : x.cells_of_dim(d)) {
        auto faces = x.cells_of_dim(d - 1);
        std::vector<const bredon::CellOrbit*> usable;
        for (const auto* f : faces)
          if (f->stabilizer->order() % from->stabilizer->order() == 0) usable.push_back(f);
        if (usable.empty()) continue;
        int attachments = static_cast<int>(rng() % 3) + (d == 1 ? 1 : 0);
        for (int a = 0; a < attachments; ++a) {
          const auto* to = usable[rng() % usable.size()];
          bredon::Incidence inc;
          inc.from = from->id;
          inc.to = to->id;
          inc.coeff = static_cast<long>(rng() % 2) + 1;
          if (rng() % 2) inc.coeff = -inc.coeff;
          inc.hom = random_hom(from->stabilizer, to->stabilizer);
          if (d == 2 && cancel_pairs) {
            bredon::Incidence mirror = inc;
            mirror.coeff = -inc.coeff;
            x.incidences.push_back(inc);
            x.incidences.push_back(std::move(mirror));
          } else {
            x.incidences.push_back(std::move(inc));
          }
        }
      }
    }

    auto constant = bredon::make_constant_system();
    auto rep = bredon::make_rep_ring_system();
    if (bredon::composite_defect(bredon::assemble_chain(x, *constant))) {
      seed = rng();
      continue;  // discard, never repair
    }
    if (bredon::composite_defect(bredon::assemble_chain(x, *rep))) {
      seed = rng();
      continue;
    }
    return x;
  }
}

}  // namespace bredon_tests

#endif
