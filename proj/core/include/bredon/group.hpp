#ifndef BREDON_GROUP_HPP
#define BREDON_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bredon {

enum class GroupOriginKind { Permutations, Matrices, Table };

// Generator description a group was closed from; kept for reporting and for
// serializing homomorphisms as generator words.
struct GroupOrigin {
  GroupOriginKind kind = GroupOriginKind::Table;
  std::size_t degree = 0;  // permutation points, or matrix dimension
  std::vector<std::vector<long>> generator_data;
};

// A finite group closed from generators. Element 0 is the identity; the
// element order is the breadth-first closure order over the generators as
// given, so every derived basis downstream is reproducible.
class FiniteGroup {
 public:
  std::string name;
  GroupOrigin origin;
  std::vector<int> generators;           // element indices of the generators
  std::vector<std::vector<long>> reprs;  // concrete element data (perm/matrix kinds)

  std::size_t order() const { return order_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int power(int a, long e) const;
  int element_order(int a) const;
  long exponent() const;
  bool is_abelian() const;
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  // Word in `generators` multiplying out to element a (empty for identity).
  std::vector<int> generator_word(int a) const;

  const std::vector<int>& mul_table() const { return mul_; }

  // Construction helpers; use close_* / group_from_table instead.
  void set_table(std::vector<int> mul, std::size_t order);
  std::vector<std::pair<int, int>> bfs_parent;  // per element: (parent, generator no.)

 private:
  std::size_t order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, contains 0, closed
  std::size_t order() const { return members.size(); }
};

struct GroupHomomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images;  // per source element

  bool is_injective() const;
  // First pair (a, b) with images[ab] != images[a]images[b], if any.
  std::optional<std::pair<int, int>> first_violation() const;
  bool verify() const { return !first_violation().has_value(); }
};

GroupHomomorphism identity_homomorphism(const GroupPtr& g);
GroupHomomorphism compose(const GroupHomomorphism& outer, const GroupHomomorphism& inner);

// Extends generator images to a full homomorphism via the BFS parent chain,
// then verifies multiplicativity; nullopt when the images are inconsistent.
std::optional<GroupHomomorphism> homomorphism_from_generator_images(
    const GroupPtr& source, const GroupPtr& target, const std::vector<int>& gen_images);

// Breadth-first closure. Permutations are image lists on 0..degree-1;
// matrices are row-major integer lists, invertible over Z (det = +-1).
FiniteGroup close_permutation_group(const std::vector<std::vector<long>>& gens,
                                    std::size_t degree, std::size_t cap,
                                    const std::string& name);
FiniteGroup close_matrix_group(const std::vector<std::vector<long>>& gens, std::size_t dim,
                               std::size_t cap, const std::string& name);
FiniteGroup group_from_table(const std::vector<int>& mul, std::size_t order,
                             const std::string& name);

// |G x H| = |G| |H|, element (a, b) at index a*|H| + b.
struct ProductGroup {
  GroupPtr group;
  GroupHomomorphism onto_left;
  GroupHomomorphism onto_right;
};
ProductGroup direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t cap);

struct ConjugacyClasses {
  std::vector<std::vector<int>> members;  // identity class first
  std::vector<int> representative;        // minimal element index per class
  std::vector<int> class_of;              // element -> class
  std::vector<int> inverse_class;         // class of the inverses
};
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& indices);
std::vector<int> centralizer(const FiniteGroup& g, const std::vector<int>& subset);

// Every subgroup, found by closing existing subgroups with one extra element;
// results sorted by (order, members). Intended for desk-scale groups.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

struct SubgroupClasses {
  std::vector<std::vector<std::vector<int>>> classes;  // conjugates per class
  std::vector<std::vector<int>> representative;        // canonical rep per class
};
SubgroupClasses subgroup_conjugacy_classes(const FiniteGroup& g);

// Materializes a subgroup as a standalone group plus its inclusion map.
struct EmbeddedGroup {
  GroupPtr group;
  GroupHomomorphism inclusion;
};
EmbeddedGroup subgroup_as_group(const GroupPtr& parent, const std::vector<int>& members,
                                const std::string& name = "");

// Exhaustive axiom check (associativity, identity, inverses, closure).
bool verify_group_axioms(const FiniteGroup& g, std::string* detail = nullptr);

// Best-effort isomorphism-type label (S4, D6, C2xC2, ...); display only.
std::string iso_label(const FiniteGroup& g);

}  // namespace bredon

#endif
