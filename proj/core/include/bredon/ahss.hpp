#ifndef BREDON_AHSS_HPP
#define BREDON_AHSS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bredon/complex.hpp"
#include "bredon/homology.hpp"

namespace bredon {

enum class CollapseStatus { CollapsesForDimensionReasons, Unknown };

// E2 page of the equivariant Atiyah-Hirzebruch spectral sequence for complex
// equivariant K-theory: E2^{p,q} = H^p with representation-ring coefficients
// for even q, zero for odd q. Rows are 2-periodic, so one representative even
// row is stored.
struct E2Page {
  int dim = -1;
  GradedAbelianGroup even_row;  // entry(p, even q)
  CollapseStatus collapse = CollapseStatus::Unknown;
  std::string note;

  AbelianGroupClass entry(int p, long q) const {
    if (p < 0 || p > dim || q % 2 != 0) return {};
    return even_row.at(static_cast<std::size_t>(p));
  }
};

E2Page e2_page(const EquivariantCellComplex& x, std::size_t group_cap = 200);

// Totals by parity when the page collapses for dimension reasons. Torsion is
// associated-graded data only (the extension problem is not solved), hence
// the caveat.
struct KTheoryRanks {
  long even = 0;
  long odd = 0;
  std::vector<Integer> even_torsion;
  std::vector<Integer> odd_torsion;
  std::string caveat;
};
std::optional<KTheoryRanks> k_theory_ranks_if_collapse(const E2Page& page);

}  // namespace bredon

#endif
