#ifndef BREDON_HOMOLOGY_HPP
#define BREDON_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bredon/complex.hpp"
#include "bredon/matrix.hpp"

namespace bredon {

// One finitely generated abelian group, as free rank plus elementary
// divisors > 1 in a divisibility chain.
struct AbelianGroupClass {
  long free_rank = 0;
  std::vector<Integer> torsion;
  bool operator==(const AbelianGroupClass& rhs) const {
    return free_rank == rhs.free_rank && torsion == rhs.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
};

// Graded by degree 0..max_degree (out of range reads as 0).
struct GradedAbelianGroup {
  std::vector<AbelianGroupClass> components;
  const AbelianGroupClass& at(std::size_t n) const;
  bool operator==(const GradedAbelianGroup& rhs) const;
};

struct BasisBlock {
  std::string cell_id;
  std::size_t offset = 0;
  std::size_t size = 0;
};

enum class Variance { Chain, Cochain };

// Assembled Bredon chain or cochain complex. For chains, maps[i] is the
// differential C_{i+1} -> C_i; for cochains, maps[i] is C^i -> C^{i+1}.
// Matrix rows always index the map's target.
struct AssembledComplex {
  Variance variance = Variance::Chain;
  int max_degree = -1;
  std::vector<std::size_t> ranks;                   // per degree 0..max_degree
  std::vector<std::vector<BasisBlock>> blocks;      // per degree
  std::vector<IntegerMatrix> maps;                  // size max(0, max_degree)
};

AssembledComplex assemble_chain(const EquivariantCellComplex& x, const CoefficientSystem& sys);
AssembledComplex assemble_cochain(const EquivariantCellComplex& x,
                                  const CoefficientSystem& sys);

// First (degree, value) with a nonzero consecutive composite, if any.
std::optional<std::pair<int, IntegerMatrix>> composite_defect(const AssembledComplex& ac);

// Homology per the elementary-divisor formula: at degree n with incoming map
// A and outgoing map B, the group is Z^(m - s - r) + sum Z/d_i with d_i the
// elementary divisors of A, s their count, r = rank B. Throws NotAComplex if
// some consecutive composite is nonzero.
GradedAbelianGroup homology(const AssembledComplex& ac);

enum class TorsionFreeStatus { TorsionFree, Inconclusive, CriterionFails };
struct TorsionFreeReport {
  TorsionFreeStatus status = TorsionFreeStatus::Inconclusive;
  std::string witness;  // offending block/minor, or the reason it is inconclusive
};

// Sufficient criterion on the degree-0-to-1 differential: if every minor of
// every vertex block lies in {-1, 0, 1}, degree-zero cohomology is
// torsion-free. Enumerates minors only up to the cap.
TorsionFreeReport torsion_free_criterion(const AssembledComplex& cochain,
                                         std::size_t minor_cap = 12);

}  // namespace bredon

#endif
