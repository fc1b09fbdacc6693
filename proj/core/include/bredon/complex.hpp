#ifndef BREDON_COMPLEX_HPP
#define BREDON_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bredon/coefficients.hpp"
#include "bredon/group.hpp"

namespace bredon {

struct CellOrbit {
  std::string id;
  int dim = 0;
  std::string stabilizer_name;
  GroupPtr stabilizer;
  std::string orientation_label;  // optional, informational
};

// A signed incidence between consecutive-dimensional cell orbits, carrying
// the explicit stabilizer homomorphism (injective, verified at parse time).
struct Incidence {
  std::string from;
  std::string to;
  Integer coeff;
  GroupHomomorphism hom;
};

class EquivariantCellComplex {
 public:
  std::string name;
  std::string note;  // orientation convention, free text
  std::vector<std::string> group_order;  // declaration order
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, CentralExtensionData> extensions;
  std::vector<CellOrbit> cells;  // declaration order
  std::vector<Incidence> incidences;

  int dimension() const;  // -1 when empty
  const CellOrbit* find_cell(const std::string& id) const;
  std::vector<const CellOrbit*> cells_of_dim(int d) const;
  bool has_extensions_for_all_stabilizers() const;

  bool operator==(const EquivariantCellComplex& rhs) const;
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
};

// Structural invariants plus d*d = 0 under every applicable bundled system.
ValidationReport validate(const EquivariantCellComplex& x, std::size_t group_cap = 200);

// X x Y over G x H: cells are pairs, stabilizers direct products, incidences
// by the Leibniz rule with sign (-1)^dim(first factor) on second-factor faces.
EquivariantCellComplex product_complex(const EquivariantCellComplex& x,
                                       const EquivariantCellComplex& y,
                                       std::size_t group_cap = 200);

struct EulerData {
  std::vector<long> orbit_counts;       // per dimension 0..dim
  std::vector<std::size_t> ranks;       // coefficient ranks per dimension
  long alternating_sum = 0;             // sum (-1)^n ranks[n]
};
EulerData euler_data(const EquivariantCellComplex& x, const CoefficientSystem& sys);

}  // namespace bredon

#endif
