#include "bredon/coefficients.hpp"

#include <algorithm>

#include "bredon/burnside.hpp"
#include "bredon/errors.hpp"

namespace bredon {

void validate_extension(const CentralExtensionData& ext) {
  const FiniteGroup& g = *ext.total;
  int t = ext.center_gen;
  if (t < 0 || static_cast<std::size_t>(t) >= g.order())
    throw ExtensionMismatch(g.name + ": extension center index out of range");
  if (g.element_order(t) != ext.n)
    throw ExtensionMismatch(g.name + ": extension center has order " +
                            std::to_string(g.element_order(t)) + ", declared " +
                            std::to_string(ext.n));
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    if (g.mul(x, t) != g.mul(t, x))
      throw ExtensionMismatch(g.name + ": extension center is not central");
}

KCentralBasis k_central_basis(const CentralExtensionData& ext, long k, std::size_t cap) {
  validate_extension(ext);
  auto table = character_table(ext.total, cap);
  long kk = ((k % ext.n) + ext.n) % ext.n;
  Cyclotomic zeta = Cyclotomic::root_of_unity(ext.n, kk);
  KCentralBasis out{table, {}};
  int tclass = table->classes.class_of[ext.center_gen];
  for (std::size_t i = 0; i < table->num_irreducibles(); ++i) {
    Cyclotomic expected = zeta.scaled(Rational(table->degrees[i]));
    if (table->irreducibles[i][static_cast<std::size_t>(tclass)] == expected)
      out.indices.push_back(i);
  }
  return out;
}

namespace {

class ConstantSystem final : public CoefficientSystem {
 public:
  CoefficientKind kind() const override { return CoefficientKind::ConstantZ; }
  std::string name() const override { return "constant"; }
  bool has_covariant() const override { return true; }
  bool has_contravariant() const override { return true; }
  BasedGroup evaluate(const GroupPtr&) const override { return {1, {"z"}}; }
  IntegerMatrix map_covariant(const GroupHomomorphism&) const override {
    IntegerMatrix m(1, 1);
    m.at(0, 0) = 1;
    return m;
  }
  IntegerMatrix map_contravariant(const GroupHomomorphism& h) const override {
    return map_covariant(h);
  }
};

class RepRingSystem final : public CoefficientSystem {
 public:
  explicit RepRingSystem(std::size_t cap) : cap_(cap) {}
  CoefficientKind kind() const override { return CoefficientKind::ComplexRepRing; }
  std::string name() const override { return "rep"; }
  bool has_covariant() const override { return true; }
  bool has_contravariant() const override { return true; }
  BasedGroup evaluate(const GroupPtr& h) const override {
    auto t = character_table(h, cap_);
    BasedGroup out;
    out.rank = t->num_irreducibles();
    for (std::size_t i = 0; i < out.rank; ++i) out.labels.push_back("irr" + std::to_string(i));
    return out;
  }
  IntegerMatrix map_covariant(const GroupHomomorphism& h) const override {
    return induction_matrix(h, cap_);
  }
  IntegerMatrix map_contravariant(const GroupHomomorphism& h) const override {
    return restriction_matrix(h, cap_);
  }

 private:
  std::size_t cap_;
};

class BurnsideSystem final : public CoefficientSystem {
 public:
  explicit BurnsideSystem(std::size_t cap) : cap_(cap) {}
  CoefficientKind kind() const override { return CoefficientKind::BurnsideRing; }
  std::string name() const override { return "burnside"; }
  bool has_covariant() const override { return true; }
  bool has_contravariant() const override { return true; }
  BasedGroup evaluate(const GroupPtr& h) const override {
    auto tom = table_of_marks(h, cap_);
    BasedGroup out;
    out.rank = tom->classes.representative.size();
    for (std::size_t i = 0; i < out.rank; ++i) out.labels.push_back("sub" + std::to_string(i));
    return out;
  }
  IntegerMatrix map_covariant(const GroupHomomorphism& h) const override {
    return burnside_induction_matrix(h, cap_);
  }
  IntegerMatrix map_contravariant(const GroupHomomorphism& h) const override {
    return burnside_restriction_matrix(h, cap_);
  }

 private:
  std::size_t cap_;
};

class KCentralSystem final : public CoefficientSystem {
 public:
  KCentralSystem(std::map<std::string, CentralExtensionData> ext, long k, std::size_t cap)
      : extensions_(std::move(ext)), k_(k), cap_(cap) {}
  CoefficientKind kind() const override { return CoefficientKind::KCentralRepRing; }
  std::string name() const override { return "kcentral:" + std::to_string(k_); }
  bool has_covariant() const override { return true; }
  bool has_contravariant() const override { return true; }

  const CentralExtensionData& extension_of(const GroupPtr& h) const {
    auto it = extensions_.find(h->name);
    if (it == extensions_.end())
      throw MissingExtensionData("group " + h->name + " carries no extension block");
    if (it->second.total->mul_table() != h->mul_table())
      throw ExtensionMismatch("extension block for " + h->name +
                              " names a different group");
    return it->second;
  }

  BasedGroup evaluate(const GroupPtr& h) const override {
    auto basis = k_central_basis(extension_of(h), k_, cap_);
    BasedGroup out;
    out.rank = basis.indices.size();
    for (std::size_t i : basis.indices) out.labels.push_back("irr" + std::to_string(i));
    return out;
  }

  IntegerMatrix map_covariant(const GroupHomomorphism& h) const override {
    return project(h, induction_matrix(h, cap_), /*rows_are_target=*/true);
  }
  IntegerMatrix map_contravariant(const GroupHomomorphism& h) const override {
    return project(h, restriction_matrix(h, cap_), /*rows_are_target=*/false);
  }

 private:
  // Cuts the full induction/restriction matrix down to the k-central bases;
  // a lifted homomorphism must send the source center generator to the
  // target one, and the complementary block must vanish.
  IntegerMatrix project(const GroupHomomorphism& h, const IntegerMatrix& full,
                        bool rows_are_target) const {
    const auto& es = extension_of(h.source);
    const auto& et = extension_of(h.target);
    if (es.n != et.n)
      throw ExtensionMismatch("central orders differ: " + std::to_string(es.n) + " vs " +
                              std::to_string(et.n));
    if (h.images[static_cast<std::size_t>(es.center_gen)] != et.center_gen)
      throw ExtensionMismatch("homomorphism does not send the center generator to the "
                              "center generator");
    auto bs = k_central_basis(es, k_, cap_);
    auto bt = k_central_basis(et, k_, cap_);
    const auto& rows_keep = rows_are_target ? bt.indices : bs.indices;
    const auto& cols_keep = rows_are_target ? bs.indices : bt.indices;
    IntegerMatrix out(rows_keep.size(), cols_keep.size());
    for (std::size_t i = 0; i < rows_keep.size(); ++i)
      for (std::size_t j = 0; j < cols_keep.size(); ++j)
        out.at(i, j) = full.at(rows_keep[i], cols_keep[j]);
    // characters of different central weight stay orthogonal
    std::vector<bool> row_in(full.rows(), false), col_in(full.cols(), false);
    for (std::size_t i : rows_keep) row_in[i] = true;
    for (std::size_t j : cols_keep) col_in[j] = true;
    for (std::size_t i = 0; i < full.rows(); ++i)
      for (std::size_t j = 0; j < full.cols(); ++j)
        if (!row_in[i] && col_in[j] && full.at(i, j) != 0)
          throw ExtensionMismatch("map leaks outside the k-central block");
    return out;
  }

  std::map<std::string, CentralExtensionData> extensions_;
  long k_;
  std::size_t cap_;
};

}  // namespace

CoefficientSystemPtr make_constant_system() { return std::make_shared<ConstantSystem>(); }
CoefficientSystemPtr make_rep_ring_system(std::size_t cap) {
  return std::make_shared<RepRingSystem>(cap);
}
CoefficientSystemPtr make_burnside_system(std::size_t cap) {
  return std::make_shared<BurnsideSystem>(cap);
}
CoefficientSystemPtr make_k_central_system(std::map<std::string, CentralExtensionData> ext,
                                           long k, std::size_t cap) {
  return std::make_shared<KCentralSystem>(std::move(ext), k, cap);
}

}  // namespace bredon
