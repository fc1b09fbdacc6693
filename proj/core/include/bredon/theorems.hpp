#ifndef BREDON_THEOREMS_HPP
#define BREDON_THEOREMS_HPP

#include <optional>
#include <vector>

#include "bredon/complex.hpp"
#include "bredon/homology.hpp"

namespace bredon {

// Finitely generated abelian groups as isomorphism classes.
std::vector<Integer> invariant_factors(std::vector<Integer> cyclic_orders);
AbelianGroupClass direct_sum(const AbelianGroupClass& a, const AbelianGroupClass& b);
AbelianGroupClass tensor_product(const AbelianGroupClass& a, const AbelianGroupClass& b);
// Tor(Z/a, Z/b) = Z/gcd(a,b); free parts contribute nothing.
AbelianGroupClass tor_product(const AbelianGroupClass& a, const AbelianGroupClass& b);

struct UctDegree {
  AbelianGroupClass homology_here;
  AbelianGroupClass homology_below;
  AbelianGroupClass cohomology;
  bool rank_match = false;
  bool torsion_match = false;
};
struct UctReport {
  std::vector<UctDegree> degrees;
  bool overall = false;
};

// Checks, degree by degree, that free rank H^n = free rank H_n and torsion
// H^n = torsion H_{n-1}; both sides computed independently (chain vs cochain
// assembly). Requires the system to satisfy the transpose duality (covariant
// map = transpose of contravariant map) on every incidence, else throws
// ConditionDViolated.
UctReport uct_check(const EquivariantCellComplex& x, const CoefficientSystem& sys);

struct KunnethDegree {
  AbelianGroupClass predicted;
  AbelianGroupClass computed;
  bool match = false;
};
struct KunnethReport {
  std::vector<KunnethDegree> degrees;
  bool overall = false;
};

// Predicts H_n(X x Y) from the factor homologies via the tensor/Tor exact
// sequence and compares against the product complex computed directly.
KunnethReport kunneth_check(const EquivariantCellComplex& x, const EquivariantCellComplex& y,
                            const CoefficientSystem& sys, std::size_t group_cap = 200);

struct UntwistReport {
  long n = 1;                      // common central order
  GradedAbelianGroup twisted;      // cohomology with the k-central system
  bool dsquare_ok = false;
  bool uct_ok = false;
  std::optional<GradedAbelianGroup> plain_rep;  // the untwisted side, when n = 1
  bool matches_plain = true;
  bool overall = false;
};

// Cohomology with the k-central system over the declared extensions; for
// degenerate extensions (n = 1) the output must equal the plain
// representation-ring cohomology.
UntwistReport untwist_consistency(const EquivariantCellComplex& x, long k,
                                  std::size_t group_cap = 200);

}  // namespace bredon

#endif
