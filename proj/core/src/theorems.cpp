#include "bredon/theorems.hpp"

#include <algorithm>
#include <map>

#include "bredon/errors.hpp"

namespace bredon {

std::vector<Integer> invariant_factors(std::vector<Integer> cyclic_orders) {
  // prime-power multiset, then the i-th invariant factor multiplies the
  // i-th largest power of each prime
  std::map<Integer, std::vector<int>> powers;  // prime -> exponents, descending later
  for (Integer d : cyclic_orders) {
    if (d <= 1) continue;
    for (Integer p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      int e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      powers[p].push_back(e);
    }
    if (d > 1) powers[d].push_back(1);
  }
  std::size_t chain_len = 0;
  for (auto& [p, es] : powers) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    chain_len = std::max(chain_len, es.size());
  }
  std::vector<Integer> chain(chain_len, Integer(1));
  for (auto& [p, es] : powers)
    for (std::size_t i = 0; i < es.size(); ++i) {
      Integer pe = 1;
      for (int e = 0; e < es[i]; ++e) pe *= p;
      chain[i] *= pe;
    }
  // chain[0] is the largest; homology lists divisors ascending
  std::reverse(chain.begin(), chain.end());
  return chain;
}

AbelianGroupClass direct_sum(const AbelianGroupClass& a, const AbelianGroupClass& b) {
  AbelianGroupClass out;
  out.free_rank = a.free_rank + b.free_rank;
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  out.torsion = invariant_factors(std::move(orders));
  return out;
}

AbelianGroupClass tensor_product(const AbelianGroupClass& a, const AbelianGroupClass& b) {
  AbelianGroupClass out;
  out.free_rank = a.free_rank * b.free_rank;
  std::vector<Integer> orders;
  for (long i = 0; i < a.free_rank; ++i)
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  for (long i = 0; i < b.free_rank; ++i)
    orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
  for (const auto& da : a.torsion)
    for (const auto& db : b.torsion) orders.push_back(gcd_int(da, db));
  out.torsion = invariant_factors(std::move(orders));
  return out;
}

AbelianGroupClass tor_product(const AbelianGroupClass& a, const AbelianGroupClass& b) {
  AbelianGroupClass out;
  std::vector<Integer> orders;
  for (const auto& da : a.torsion)
    for (const auto& db : b.torsion) orders.push_back(gcd_int(da, db));
  out.torsion = invariant_factors(std::move(orders));
  return out;
}

UctReport uct_check(const EquivariantCellComplex& x, const CoefficientSystem& sys) {
  for (const auto& inc : x.incidences) {
    IntegerMatrix cov = sys.map_covariant(inc.hom);
    IntegerMatrix contra = sys.map_contravariant(inc.hom);
    if (!(cov == contra.transposed()))
      throw ConditionDViolated("incidence " + inc.from + " -> " + inc.to +
                               ": covariant map is not the transpose of the contravariant map");
  }
  auto hom = homology(assemble_chain(x, sys));
  auto coh = homology(assemble_cochain(x, sys));
  UctReport report;
  report.overall = true;
  int dim = x.dimension();
  for (int n = 0; n <= dim; ++n) {
    UctDegree d;
    d.homology_here = hom.at(static_cast<std::size_t>(n));
    if (n > 0) d.homology_below = hom.at(static_cast<std::size_t>(n - 1));
    d.cohomology = coh.at(static_cast<std::size_t>(n));
    d.rank_match = d.cohomology.free_rank == d.homology_here.free_rank;
    d.torsion_match = d.cohomology.torsion == d.homology_below.torsion;
    report.overall = report.overall && d.rank_match && d.torsion_match;
    report.degrees.push_back(std::move(d));
  }
  return report;
}

KunnethReport kunneth_check(const EquivariantCellComplex& x, const EquivariantCellComplex& y,
                            const CoefficientSystem& sys, std::size_t group_cap) {
  auto hx = homology(assemble_chain(x, sys));
  auto hy = homology(assemble_chain(y, sys));
  auto product = product_complex(x, y, group_cap);
  auto hp = homology(assemble_chain(product, sys));

  KunnethReport report;
  report.overall = true;
  int dim = product.dimension();
  for (int n = 0; n <= dim; ++n) {
    KunnethDegree d;
    AbelianGroupClass predicted;
    for (int i = 0; i <= n; ++i)
      predicted = direct_sum(
          predicted, tensor_product(hx.at(static_cast<std::size_t>(i)),
                                    hy.at(static_cast<std::size_t>(n - i))));
    for (int i = 0; i + 1 <= n; ++i)
      predicted = direct_sum(predicted,
                             tor_product(hx.at(static_cast<std::size_t>(i)),
                                         hy.at(static_cast<std::size_t>(n - 1 - i))));
    d.predicted = std::move(predicted);
    d.computed = hp.at(static_cast<std::size_t>(n));
    // normalize the computed torsion to the same canonical chain
    d.computed.torsion = invariant_factors(d.computed.torsion);
    d.match = d.predicted == d.computed;
    report.overall = report.overall && d.match;
    report.degrees.push_back(std::move(d));
  }
  return report;
}

UntwistReport untwist_consistency(const EquivariantCellComplex& x, long k,
                                  std::size_t group_cap) {
  if (!x.has_extensions_for_all_stabilizers())
    throw MissingExtensionData("untwisting needs an extension block on every stabilizer");
  UntwistReport report;
  report.n = 0;
  for (const auto& c : x.cells) {
    long n = x.extensions.at(c.stabilizer_name).n;
    if (report.n == 0) report.n = n;
    if (report.n != n)
      throw ExtensionMismatch("stabilizers declare different central orders " +
                              std::to_string(report.n) + " and " + std::to_string(n));
  }
  auto sys = make_k_central_system(x.extensions, k, group_cap);
  auto cochain = assemble_cochain(x, *sys);
  report.dsquare_ok = !composite_defect(cochain).has_value();
  if (!report.dsquare_ok) return report;
  report.twisted = homology(cochain);
  report.uct_ok = uct_check(x, *sys).overall;
  if (report.n == 1) {
    auto rep = make_rep_ring_system(group_cap);
    report.plain_rep = homology(assemble_cochain(x, *rep));
    report.matches_plain = report.twisted == *report.plain_rep;
  }
  report.overall = report.dsquare_ok && report.uct_ok && report.matches_plain;
  return report;
}

}  // namespace bredon
