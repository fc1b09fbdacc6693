#ifndef BREDON_CHARACTER_HPP
#define BREDON_CHARACTER_HPP

#include <memory>
#include <vector>

#include "bredon/cyclotomic.hpp"
#include "bredon/group.hpp"
#include "bredon/matrix.hpp"

namespace bredon {

// Exact character table. Irreducibles are ordered by (degree, then the
// deterministic cyclotomic order on their value tuples), which pins every
// matrix layout downstream; the trivial character always sorts first.
class CharacterTable {
 public:
  GroupPtr group;
  ConjugacyClasses classes;
  std::vector<std::vector<Cyclotomic>> irreducibles;  // [irr][class]
  std::vector<Integer> degrees;

  std::size_t num_classes() const { return classes.members.size(); }
  std::size_t num_irreducibles() const { return irreducibles.size(); }

  // <phi, psi> = 1/|G| sum |C| phi(C) conj(psi(C)); exact.
  Cyclotomic inner_product(const std::vector<Cyclotomic>& phi,
                           const std::vector<Cyclotomic>& psi) const;
};

using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

// Computes (and memoizes, keyed by the multiplication table, safe under
// concurrent use) the exact character table via the class-sum eigenvector
// method run modulo a Dixon prime and lifted back to cyclotomics; the result
// is verified against the exact orthogonality relations before it is cached.
CharacterTablePtr character_table(const GroupPtr& g, std::size_t cap = 200);

// A class function given by its values on the conjugacy classes of a group.
struct ClassFunction {
  CharacterTablePtr table;
  std::vector<Cyclotomic> values;  // per class, in table class order
};

ClassFunction irreducible_character(const CharacterTablePtr& t, std::size_t index);
ClassFunction trivial_character(const CharacterTablePtr& t);

// Frobenius induction along an injective homomorphism h : H -> K.
ClassFunction induce(const ClassFunction& chi, const GroupHomomorphism& h,
                     std::size_t cap = 200);
// Restriction along any verified homomorphism h : H -> K of a class function on K.
ClassFunction restrict_along(const ClassFunction& chi, const GroupHomomorphism& h,
                             std::size_t cap = 200);

// Integer vector in the irreducible basis (the representation ring element).
struct RepRingElement {
  CharacterTablePtr table;
  std::vector<Integer> coeffs;
};
RepRingElement decompose(const ClassFunction& chi);

// Columns are the decompositions of the induced (restricted) basis
// characters; Frobenius reciprocity makes them mutual transposes.
IntegerMatrix induction_matrix(const GroupHomomorphism& h, std::size_t cap = 200);
IntegerMatrix restriction_matrix(const GroupHomomorphism& h, std::size_t cap = 200);

}  // namespace bredon

#endif
