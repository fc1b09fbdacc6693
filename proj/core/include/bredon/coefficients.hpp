#ifndef BREDON_COEFFICIENTS_HPP
#define BREDON_COEFFICIENTS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bredon/character.hpp"
#include "bredon/group.hpp"
#include "bredon/matrix.hpp"

namespace bredon {

// A central extension 1 -> Z/n -> H~ -> H -> 1 attached to a stabilizer.
// The declared group *is* the extended group; `center_gen` generates the
// central Z/n.
struct CentralExtensionData {
  GroupPtr total;
  int center_gen = 0;
  long n = 1;
};

// Throws unless center_gen is central of order exactly n.
void validate_extension(const CentralExtensionData& ext);

// Irreducibles of H~ on which the central generator acts by e^(2 pi i k/n).
struct KCentralBasis {
  CharacterTablePtr table;
  std::vector<std::size_t> indices;  // into table->irreducibles
};
KCentralBasis k_central_basis(const CentralExtensionData& ext, long k, std::size_t cap = 200);

struct BasedGroup {
  std::size_t rank = 0;
  std::vector<std::string> labels;
};

enum class CoefficientKind { ConstantZ, ComplexRepRing, BurnsideRing, KCentralRepRing };

// Evaluation at each stabilizer as a based free abelian group, plus the
// induced integer matrices along incidence homomorphisms in both variances.
class CoefficientSystem {
 public:
  virtual ~CoefficientSystem() = default;
  virtual CoefficientKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual bool has_covariant() const = 0;
  virtual bool has_contravariant() const = 0;
  virtual BasedGroup evaluate(const GroupPtr& h) const = 0;
  virtual IntegerMatrix map_covariant(const GroupHomomorphism& h) const = 0;
  virtual IntegerMatrix map_contravariant(const GroupHomomorphism& h) const = 0;
};

using CoefficientSystemPtr = std::shared_ptr<const CoefficientSystem>;

CoefficientSystemPtr make_constant_system();
CoefficientSystemPtr make_rep_ring_system(std::size_t cap = 200);
CoefficientSystemPtr make_burnside_system(std::size_t cap = 200);

// k-central representation system; extensions are looked up by group name.
CoefficientSystemPtr make_k_central_system(
    std::map<std::string, CentralExtensionData> extensions, long k, std::size_t cap = 200);

}  // namespace bredon

#endif
