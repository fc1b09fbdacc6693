#ifndef BREDON_BURNSIDE_HPP
#define BREDON_BURNSIDE_HPP

#include <memory>
#include <vector>

#include "bredon/group.hpp"
#include "bredon/matrix.hpp"

namespace bredon {

// Table of marks: subgroup conjugacy classes ordered by (order, canonical
// representative); marks[i][j] = |(G/H_i)^{H_j}|, lower triangular with
// positive diagonal under that ordering.
struct TableOfMarks {
  GroupPtr group;
  SubgroupClasses classes;
  IntegerMatrix marks;
};

using TableOfMarksPtr = std::shared_ptr<const TableOfMarks>;

TableOfMarksPtr table_of_marks(const GroupPtr& g, std::size_t cap = 200);

// Class index of a subgroup (given by its member list) in the table.
std::size_t subgroup_class_index(const TableOfMarks& tom, std::vector<int> members);

// Covariant map on Burnside rings along injective h: [H/L] -> [K/h(L)].
IntegerMatrix burnside_induction_matrix(const GroupHomomorphism& h, std::size_t cap = 200);

// Contravariant map: a K-set restricted to H along h, decomposed through the
// mark homomorphism (fixed-point counts solved against the table of marks).
IntegerMatrix burnside_restriction_matrix(const GroupHomomorphism& h, std::size_t cap = 200);

}  // namespace bredon

#endif
