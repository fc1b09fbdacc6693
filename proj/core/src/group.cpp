#include "bredon/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bredon/errors.hpp"
#include "bredon/matrix.hpp"

namespace bredon {

void FiniteGroup::set_table(std::vector<int> mul, std::size_t order) {
  order_ = order;
  mul_ = std::move(mul);
  inv_.assign(order, -1);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b)
      if (this->mul(static_cast<int>(a), static_cast<int>(b)) == 0) {
        inv_[a] = static_cast<int>(b);
        break;
      }
    if (inv_[a] < 0) throw Error("group table has an element without inverse");
  }
}

int FiniteGroup::power(int a, long e) const {
  long n = static_cast<long>(order());
  long k = e % (element_order(a));
  if (k < 0) k += element_order(a);
  (void)n;
  int acc = 0;
  for (long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != 0) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (std::size_t a = 0; a < order(); ++a)
    e = std::lcm(e, static_cast<long>(element_order(static_cast<int>(a))));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) !=
          mul(static_cast<int>(b), static_cast<int>(a)))
        return false;
  return true;
}

std::vector<int> FiniteGroup::generator_word(int a) const {
  std::vector<int> w;
  while (a != 0) {
    const auto& [parent, gen] = bfs_parent[a];
    w.push_back(gen);
    a = parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool GroupHomomorphism::is_injective() const {
  std::set<int> seen(images.begin(), images.end());
  return seen.size() == images.size();
}

std::optional<std::pair<int, int>> GroupHomomorphism::first_violation() const {
  if (images.size() != source->order()) return std::make_pair(0, 0);
  if (!images.empty() && images[0] != 0) return std::make_pair(0, 0);
  const int n = static_cast<int>(source->order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
        return std::make_pair(a, b);
  return std::nullopt;
}

GroupHomomorphism identity_homomorphism(const GroupPtr& g) {
  GroupHomomorphism h{g, g, {}};
  h.images.resize(g->order());
  std::iota(h.images.begin(), h.images.end(), 0);
  return h;
}

GroupHomomorphism compose(const GroupHomomorphism& outer, const GroupHomomorphism& inner) {
  if (inner.target->mul_table() != outer.source->mul_table())
    throw Error("homomorphism composition: middle groups differ");
  GroupHomomorphism h{inner.source, outer.target, {}};
  h.images.reserve(inner.images.size());
  for (int im : inner.images) h.images.push_back(outer.images[im]);
  return h;
}

std::optional<GroupHomomorphism> homomorphism_from_generator_images(
    const GroupPtr& source, const GroupPtr& target, const std::vector<int>& gen_images) {
  if (gen_images.size() != source->generators.size()) return std::nullopt;
  GroupHomomorphism h{source, target, std::vector<int>(source->order(), -1)};
  h.images[0] = 0;
  // BFS order guarantees the parent image is known before the child's.
  for (std::size_t a = 1; a < source->order(); ++a) {
    const auto& [parent, gen] = source->bfs_parent[a];
    h.images[a] = target->mul(h.images[parent], gen_images[gen]);
  }
  if (h.first_violation().has_value()) return std::nullopt;
  return h;
}

namespace {

std::vector<long> compose_repr(GroupOriginKind kind, std::size_t degree,
                               const std::vector<long>& a, const std::vector<long>& b) {
  if (kind == GroupOriginKind::Permutations) {
    std::vector<long> c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  }
  std::vector<long> c(degree * degree, 0);
  for (std::size_t i = 0; i < degree; ++i)
    for (std::size_t k = 0; k < degree; ++k) {
      long aik = a[i * degree + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < degree; ++j) c[i * degree + j] += aik * b[k * degree + j];
    }
  return c;
}

FiniteGroup close_concrete(GroupOriginKind kind, std::size_t degree,
                           const std::vector<std::vector<long>>& gens, std::size_t cap,
                           const std::string& name) {
  std::vector<long> id;
  if (kind == GroupOriginKind::Permutations) {
    id.resize(degree);
    std::iota(id.begin(), id.end(), 0);
  } else {
    id.assign(degree * degree, 0);
    for (std::size_t i = 0; i < degree; ++i) id[i * degree + i] = 1;
  }

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& g = gens[gi];
    if (kind == GroupOriginKind::Permutations) {
      if (g.size() != degree) throw NonInvertibleGenerator(name + ": bad permutation length");
      std::vector<bool> seen(degree, false);
      for (long v : g) {
        if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[static_cast<std::size_t>(v)])
          throw NonInvertibleGenerator(name + ": generator " + std::to_string(gi) +
                                       " is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
      }
    } else {
      if (g.size() != degree * degree)
        throw NonInvertibleGenerator(name + ": bad matrix length");
      IntegerMatrix m(degree, degree);
      for (std::size_t i = 0; i < degree; ++i)
        for (std::size_t j = 0; j < degree; ++j) m.at(i, j) = g[i * degree + j];
      Integer det = m.determinant();
      if (det != 1 && det != -1)
        throw NonInvertibleGenerator(name + ": generator " + std::to_string(gi) +
                                     " has determinant " + det.str());
    }
  }

  std::vector<std::vector<long>> elems{id};
  std::map<std::vector<long>, int> index{{id, 0}};
  std::vector<std::pair<int, int>> parent{{-1, -1}};
  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      auto c = compose_repr(kind, degree, elems[cur], gens[gi]);
      auto [it, inserted] = index.emplace(c, static_cast<int>(elems.size()));
      if (inserted) {
        elems.push_back(std::move(c));
        parent.emplace_back(static_cast<int>(cur), static_cast<int>(gi));
        if (elems.size() > cap)
          throw ClosureExceedsCap(name + ": closure exceeds cap " + std::to_string(cap));
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<int> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto c = compose_repr(kind, degree, elems[a], elems[b]);
      auto it = index.find(c);
      if (it == index.end()) throw Error(name + ": generators do not close");
      mul[a * n + b] = it->second;
    }

  FiniteGroup g;
  g.name = name;
  g.origin.kind = kind;
  g.origin.degree = degree;
  g.origin.generator_data = gens;
  g.reprs = std::move(elems);
  g.bfs_parent = std::move(parent);
  for (const auto& gen : gens) g.generators.push_back(index.at(gen));
  g.set_table(std::move(mul), n);
  return g;
}

}  // namespace

FiniteGroup close_permutation_group(const std::vector<std::vector<long>>& gens,
                                    std::size_t degree, std::size_t cap,
                                    const std::string& name) {
  return close_concrete(GroupOriginKind::Permutations, degree, gens, cap, name);
}

FiniteGroup close_matrix_group(const std::vector<std::vector<long>>& gens, std::size_t dim,
                               std::size_t cap, const std::string& name) {
  return close_concrete(GroupOriginKind::Matrices, dim, gens, cap, name);
}

FiniteGroup group_from_table(const std::vector<int>& mul, std::size_t order,
                             const std::string& name) {
  if (mul.size() != order * order) throw Error(name + ": bad table size");
  for (int v : mul)
    if (v < 0 || static_cast<std::size_t>(v) >= order)
      throw Error(name + ": table entry out of range");
  for (std::size_t a = 0; a < order; ++a)
    if (mul[a] != static_cast<int>(a) || mul[a * order] != static_cast<int>(a))
      throw Error(name + ": index 0 is not a two-sided identity");
  FiniteGroup g;
  g.name = name;
  g.origin.kind = GroupOriginKind::Table;
  g.origin.degree = order;
  // All non-identity elements act as generators so words stay available.
  std::vector<int> gens;
  for (std::size_t a = 1; a < order; ++a) gens.push_back(static_cast<int>(a));
  g.generators = gens;
  g.bfs_parent.assign(order, {-1, -1});
  for (std::size_t a = 1; a < order; ++a)
    g.bfs_parent[a] = {0, static_cast<int>(a - 1)};
  g.set_table(mul, order);
  std::string why;
  if (!verify_group_axioms(g, &why)) throw Error(name + ": " + why);
  return g;
}

ProductGroup direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t cap) {
  const std::size_t n = g->order() * h->order();
  if (n > cap)
    throw ClosureExceedsCap("direct product order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
  std::vector<int> mul(n * n);
  const int oh = static_cast<int>(h->order());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int a1 = static_cast<int>(a) / oh, a2 = static_cast<int>(a) % oh;
      int b1 = static_cast<int>(b) / oh, b2 = static_cast<int>(b) % oh;
      mul[a * n + b] = g->mul(a1, b1) * oh + h->mul(a2, b2);
    }
  auto gp = std::make_shared<FiniteGroup>(
      group_from_table(mul, n, g->name + "x" + h->name));
  ProductGroup out;
  out.group = gp;
  out.onto_left = GroupHomomorphism{gp, g, {}};
  out.onto_right = GroupHomomorphism{gp, h, {}};
  for (std::size_t a = 0; a < n; ++a) {
    out.onto_left.images.push_back(static_cast<int>(a) / oh);
    out.onto_right.images.push_back(static_cast<int>(a) % oh);
  }
  return out;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> members;
    for (int x = 0; x < n; ++x) {
      int c = g.conjugate(x, a);
      if (cls[c] < 0) {
        cls[c] = static_cast<int>(classes.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  // Order classes by (representative order, minimal index); identity first.
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    int oi = g.element_order(classes[i][0]);
    int oj = g.element_order(classes[j][0]);
    if (oi != oj) return oi < oj;
    return classes[i][0] < classes[j][0];
  });
  ConjugacyClasses out;
  out.class_of.assign(n, -1);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    out.members.push_back(classes[perm[k]]);
    out.representative.push_back(classes[perm[k]][0]);
    for (int m : classes[perm[k]]) out.class_of[m] = static_cast<int>(k);
  }
  for (std::size_t k = 0; k < out.members.size(); ++k)
    out.inverse_class.push_back(out.class_of[g.inv(out.representative[k])]);
  return out;
}

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& indices) {
  std::set<int> seen{0};
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int gen : indices) {
      int c = g.mul(queue[i], gen);
      if (seen.insert(c).second) queue.push_back(c);
      c = g.mul(queue[i], g.inv(gen));
      if (seen.insert(c).second) queue.push_back(c);
    }
  return {seen.begin(), seen.end()};
}

std::vector<int> centralizer(const FiniteGroup& g, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool commutes = true;
    for (int s : subset)
      if (g.mul(x, s) != g.mul(s, x)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  found.insert({0});
  std::vector<std::vector<int>> queue{{0}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto base = queue[i];
    for (int x = 1; x < static_cast<int>(g.order()); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      auto gens = base;
      gens.push_back(x);
      auto sub = subgroup_generated(g, gens);
      if (found.insert(sub).second) queue.push_back(sub);
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

SubgroupClasses subgroup_conjugacy_classes(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  std::set<std::vector<int>> remaining(subs.begin(), subs.end());
  SubgroupClasses out;
  for (const auto& s : subs) {
    if (!remaining.count(s)) continue;
    std::set<std::vector<int>> orbit;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      std::vector<int> conj;
      conj.reserve(s.size());
      for (int m : s) conj.push_back(g.conjugate(x, m));
      std::sort(conj.begin(), conj.end());
      orbit.insert(conj);
    }
    for (const auto& c : orbit) remaining.erase(c);
    out.representative.push_back(*orbit.begin());
    out.classes.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

EmbeddedGroup subgroup_as_group(const GroupPtr& parent, const std::vector<int>& members,
                                const std::string& name) {
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  std::map<int, int> pos;
  for (std::size_t i = 0; i < n; ++i) pos[sorted[i]] = static_cast<int>(i);
  if (sorted.empty() || sorted[0] != 0) throw Error("subgroup must contain the identity");
  std::vector<int> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = pos.find(parent->mul(sorted[a], sorted[b]));
      if (it == pos.end()) throw Error("subset is not closed under multiplication");
      mul[a * n + b] = it->second;
    }
  std::string nm = name.empty()
                       ? parent->name + "[" + std::to_string(n) + "]"
                       : name;
  auto sub = std::make_shared<FiniteGroup>(group_from_table(mul, n, nm));
  GroupHomomorphism incl{sub, parent, sorted};
  return {sub, incl};
}

bool verify_group_axioms(const FiniteGroup& g, std::string* detail) {
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) {
      if (detail) *detail = "identity fails at " + std::to_string(a);
      return false;
    }
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) {
      if (detail) *detail = "inverse fails at " + std::to_string(a);
      return false;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          if (detail)
            *detail = "associativity fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")";
          return false;
        }
  return true;
}

std::string iso_label(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return "1";
  long exp = g.exponent();
  bool ab = g.is_abelian();
  std::size_t ncl = conjugacy_classes(g).members.size();
  if (ab && static_cast<std::size_t>(exp) == n) return "C" + std::to_string(n);
  if (ab) {
    if (n == 4) return "C2xC2";
    if (n == 8 && exp == 2) return "C2xC2xC2";
    return "A(" + std::to_string(n) + ",exp " + std::to_string(exp) + ")";
  }
  if (n == 6) return "D3";
  if (n == 8 && exp == 4 && ncl == 5) {
    // D4 has 2 elements of order 4, Q8 has 6.
    int order4 = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (g.element_order(static_cast<int>(a)) == 4) ++order4;
    return order4 == 2 ? "D4" : "Q8";
  }
  if (n == 12 && exp == 6 && ncl == 6) return "D6";
  if (n == 12 && ncl == 4) return "A4";
  if (n == 24 && exp == 12 && ncl == 5) return "S4";
  if (n % 2 == 0 && exp == static_cast<long>(n) / 2 && ncl > 0) {
    int order2 = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (g.element_order(static_cast<int>(a)) == 2) ++order2;
    if (order2 >= static_cast<int>(n) / 2) return "D" + std::to_string(n / 2);
  }
  return "G(" + std::to_string(n) + ")";
}

}  // namespace bredon
