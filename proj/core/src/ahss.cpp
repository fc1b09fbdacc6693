#include "bredon/ahss.hpp"

#include "bredon/theorems.hpp"

namespace bredon {

E2Page e2_page(const EquivariantCellComplex& x, std::size_t group_cap) {
  E2Page page;
  page.dim = x.dimension();
  auto sys = make_rep_ring_system(group_cap);
  page.even_row = homology(assemble_cochain(x, *sys));

  // Columns that can carry anything at all: dimensions with cells.
  int occupied_columns = 0;
  for (int p = 0; p <= page.dim; ++p)
    if (!x.cells_of_dim(p).empty()) ++occupied_columns;

  // d2 (and every even-r differential) lands in an odd row; d3 and higher
  // differentials need a p-span of at least 3. Collapse is asserted only for
  // such bidegree reasons, never from an unproven d3.
  if (page.dim <= 2 || occupied_columns <= 1) {
    page.collapse = CollapseStatus::CollapsesForDimensionReasons;
  } else {
    page.collapse = CollapseStatus::Unknown;
    page.note =
        "no closed formula is available for the third differential; collapse undetermined";
  }
  return page;
}

std::optional<KTheoryRanks> k_theory_ranks_if_collapse(const E2Page& page) {
  if (page.collapse != CollapseStatus::CollapsesForDimensionReasons) return std::nullopt;
  KTheoryRanks out;
  std::vector<Integer> even_orders, odd_orders;
  for (int p = 0; p <= page.dim; ++p) {
    const auto& comp = page.even_row.at(static_cast<std::size_t>(p));
    if (p % 2 == 0) {
      out.even += comp.free_rank;
      even_orders.insert(even_orders.end(), comp.torsion.begin(), comp.torsion.end());
    } else {
      out.odd += comp.free_rank;
      odd_orders.insert(odd_orders.end(), comp.torsion.begin(), comp.torsion.end());
    }
  }
  out.even_torsion = invariant_factors(std::move(even_orders));
  out.odd_torsion = invariant_factors(std::move(odd_orders));
  out.caveat = "torsion is associated-graded data; extension problems are not resolved";
  return out;
}

}  // namespace bredon
