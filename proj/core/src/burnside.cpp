#include "bredon/burnside.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "bredon/errors.hpp"

namespace bredon {

namespace {

std::map<std::vector<int>, TableOfMarksPtr>& tom_cache() {
  static std::map<std::vector<int>, TableOfMarksPtr> cache;
  return cache;
}
std::mutex& tom_cache_mutex() {
  static std::mutex mu;
  return mu;
}

bool subset_conjugate_into(const FiniteGroup& g, const std::vector<int>& sub, int conj,
                           const std::vector<int>& super) {
  for (int s : sub) {
    int c = g.conjugate(conj, s);
    if (!std::binary_search(super.begin(), super.end(), c)) return false;
  }
  return true;
}

}  // namespace

TableOfMarksPtr table_of_marks(const GroupPtr& g, std::size_t cap) {
  if (g->order() > cap)
    throw CapExceeded("table of marks: |" + g->name + "| exceeds cap " + std::to_string(cap));
  {
    std::lock_guard<std::mutex> lock(tom_cache_mutex());
    auto it = tom_cache().find(g->mul_table());
    if (it != tom_cache().end()) return it->second;
  }
  auto tom = std::make_shared<TableOfMarks>();
  tom->group = g;
  tom->classes = subgroup_conjugacy_classes(*g);
  const std::size_t c = tom->classes.representative.size();
  tom->marks = IntegerMatrix(c, c);
  for (std::size_t i = 0; i < c; ++i) {
    const auto& hi = tom->classes.representative[i];
    for (std::size_t j = 0; j < c; ++j) {
      const auto& hj = tom->classes.representative[j];
      // #{x : x^-1 Hj x <= Hi} / |Hi|
      long count = 0;
      for (int x = 0; x < static_cast<int>(g->order()); ++x)
        if (subset_conjugate_into(*g, hj, g->inv(x), hi)) ++count;
      tom->marks.at(i, j) = count / static_cast<long>(hi.size());
    }
  }
  std::lock_guard<std::mutex> lock(tom_cache_mutex());
  auto [it, inserted] = tom_cache().emplace(g->mul_table(), tom);
  return it->second;
}

std::size_t subgroup_class_index(const TableOfMarks& tom, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < tom.classes.classes.size(); ++i)
    for (const auto& conj : tom.classes.classes[i])
      if (conj == members) return i;
  throw Error("subgroup not found in table of marks");
}

IntegerMatrix burnside_induction_matrix(const GroupHomomorphism& h, std::size_t cap) {
  if (!h.is_injective())
    throw NonInjectiveHomomorphism("Burnside induction requires an injective homomorphism");
  auto tom_h = table_of_marks(h.source, cap);
  auto tom_k = table_of_marks(h.target, cap);
  const std::size_t ch = tom_h->classes.representative.size();
  const std::size_t ck = tom_k->classes.representative.size();
  IntegerMatrix m(ck, ch);
  for (std::size_t j = 0; j < ch; ++j) {
    std::vector<int> image;
    image.reserve(tom_h->classes.representative[j].size());
    for (int s : tom_h->classes.representative[j])
      image.push_back(h.images[static_cast<std::size_t>(s)]);
    m.at(subgroup_class_index(*tom_k, std::move(image)), j) = 1;
  }
  return m;
}

IntegerMatrix burnside_restriction_matrix(const GroupHomomorphism& h, std::size_t cap) {
  auto tom_h = table_of_marks(h.source, cap);
  auto tom_k = table_of_marks(h.target, cap);
  const FiniteGroup& kk = *h.target;
  const std::size_t ch = tom_h->classes.representative.size();
  const std::size_t ck = tom_k->classes.representative.size();

  IntegerMatrix m(ch, ck);
  for (std::size_t j = 0; j < ck; ++j) {
    const auto& msub = tom_k->classes.representative[j];  // K-set K/M
    // coset representatives of M in K
    std::vector<int> reps;
    std::vector<bool> seen(kk.order(), false);
    for (int x = 0; x < static_cast<int>(kk.order()); ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      reps.push_back(x);
      for (int s : msub) seen[static_cast<std::size_t>(kk.mul(x, s))] = true;
    }
    // fixed points of each H-subgroup-class representative
    std::vector<Integer> fixed(ch);
    for (std::size_t i = 0; i < ch; ++i) {
      const auto& si = tom_h->classes.representative[i];
      long count = 0;
      for (int krep : reps) {
        bool fixes = true;
        for (int s : si) {
          int moved = kk.mul(kk.inv(krep), kk.mul(h.images[static_cast<std::size_t>(s)], krep));
          if (!std::binary_search(msub.begin(), msub.end(), moved)) {
            fixes = false;
            break;
          }
        }
        if (fixes) ++count;
      }
      fixed[i] = count;
    }
    // solve sum_c x_c marks[c][i] = fixed[i] by back-substitution
    std::vector<Rational> x(ch, Rational(0));
    for (std::size_t c = ch; c-- > 0;) {
      Rational acc(fixed[c]);
      for (std::size_t c2 = c + 1; c2 < ch; ++c2)
        acc -= Rational(tom_h->marks.at(c2, c)) * x[c2];
      x[c] = acc / Rational(tom_h->marks.at(c, c));
    }
    for (std::size_t c = 0; c < ch; ++c) {
      if (boost::multiprecision::denominator(x[c]) != 1 || x[c] < 0)
        throw Error("Burnside restriction: mark decomposition is not a G-set");
      m.at(c, j) = boost::multiprecision::numerator(x[c]);
    }
  }
  return m;
}

}  // namespace bredon
