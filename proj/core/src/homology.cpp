#include "bredon/homology.hpp"

#include <algorithm>
#include <sstream>

#include "bredon/errors.hpp"

namespace bredon {

std::string AbelianGroupClass::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

const AbelianGroupClass& GradedAbelianGroup::at(std::size_t n) const {
  static const AbelianGroupClass zero{};
  if (n >= components.size()) return zero;
  return components[n];
}

bool GradedAbelianGroup::operator==(const GradedAbelianGroup& rhs) const {
  std::size_t n = std::max(components.size(), rhs.components.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!(at(i) == rhs.at(i))) return false;
  return true;
}

namespace {

struct DegreeLayout {
  std::vector<std::vector<BasisBlock>> blocks;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::string>> labels;
};

DegreeLayout layout_degrees(const EquivariantCellComplex& x, const CoefficientSystem& sys,
                            int dim) {
  DegreeLayout out;
  out.blocks.resize(static_cast<std::size_t>(dim + 1));
  out.ranks.assign(static_cast<std::size_t>(dim + 1), 0);
  out.labels.resize(static_cast<std::size_t>(dim + 1));
  for (int d = 0; d <= dim; ++d) {
    std::size_t offset = 0;
    for (const CellOrbit* c : x.cells_of_dim(d)) {
      BasedGroup bg = sys.evaluate(c->stabilizer);
      out.blocks[static_cast<std::size_t>(d)].push_back(BasisBlock{c->id, offset, bg.rank});
      for (const auto& lb : bg.labels)
        out.labels[static_cast<std::size_t>(d)].push_back(c->id + ":" + lb);
      offset += bg.rank;
    }
    out.ranks[static_cast<std::size_t>(d)] = offset;
  }
  return out;
}

const BasisBlock& block_of(const std::vector<BasisBlock>& blocks, const std::string& id) {
  for (const auto& b : blocks)
    if (b.cell_id == id) return b;
  throw Error("internal: no basis block for cell " + id);
}

}  // namespace

AssembledComplex assemble_chain(const EquivariantCellComplex& x, const CoefficientSystem& sys) {
  AssembledComplex ac;
  ac.variance = Variance::Chain;
  ac.max_degree = x.dimension();
  if (ac.max_degree < 0) return ac;
  auto layout = layout_degrees(x, sys, ac.max_degree);
  ac.blocks = layout.blocks;
  ac.ranks = layout.ranks;
  for (int n = 1; n <= ac.max_degree; ++n) {
    IntegerMatrix m(layout.ranks[static_cast<std::size_t>(n - 1)],
                    layout.ranks[static_cast<std::size_t>(n)]);
    m.row_labels = layout.labels[static_cast<std::size_t>(n - 1)];
    m.col_labels = layout.labels[static_cast<std::size_t>(n)];
    for (const auto& inc : x.incidences) {
      const CellOrbit* from = x.find_cell(inc.from);
      if (from->dim != n) continue;
      const auto& colb = block_of(ac.blocks[static_cast<std::size_t>(n)], inc.from);
      const auto& rowb = block_of(ac.blocks[static_cast<std::size_t>(n - 1)], inc.to);
      IntegerMatrix piece = sys.map_covariant(inc.hom);
      if (piece.rows() != rowb.size || piece.cols() != colb.size)
        throw Error("covariant map shape disagrees with evaluation ranks at " + inc.from);
      m.add_block(rowb.offset, colb.offset, piece, inc.coeff);
    }
    ac.maps.push_back(std::move(m));
  }
  return ac;
}

AssembledComplex assemble_cochain(const EquivariantCellComplex& x,
                                  const CoefficientSystem& sys) {
  AssembledComplex ac;
  ac.variance = Variance::Cochain;
  ac.max_degree = x.dimension();
  if (ac.max_degree < 0) return ac;
  auto layout = layout_degrees(x, sys, ac.max_degree);
  ac.blocks = layout.blocks;
  ac.ranks = layout.ranks;
  for (int n = 0; n < ac.max_degree; ++n) {
    IntegerMatrix m(layout.ranks[static_cast<std::size_t>(n + 1)],
                    layout.ranks[static_cast<std::size_t>(n)]);
    m.row_labels = layout.labels[static_cast<std::size_t>(n + 1)];
    m.col_labels = layout.labels[static_cast<std::size_t>(n)];
    for (const auto& inc : x.incidences) {
      const CellOrbit* from = x.find_cell(inc.from);
      if (from->dim != n + 1) continue;
      const auto& rowb = block_of(ac.blocks[static_cast<std::size_t>(n + 1)], inc.from);
      const auto& colb = block_of(ac.blocks[static_cast<std::size_t>(n)], inc.to);
      IntegerMatrix piece = sys.map_contravariant(inc.hom);
      if (piece.rows() != rowb.size || piece.cols() != colb.size)
        throw Error("contravariant map shape disagrees with evaluation ranks at " + inc.from);
      m.add_block(rowb.offset, colb.offset, piece, inc.coeff);
    }
    ac.maps.push_back(std::move(m));
  }
  return ac;
}

std::optional<std::pair<int, IntegerMatrix>> composite_defect(const AssembledComplex& ac) {
  for (std::size_t i = 0; i + 1 < ac.maps.size(); ++i) {
    IntegerMatrix prod = (ac.variance == Variance::Chain) ? ac.maps[i] * ac.maps[i + 1]
                                                          : ac.maps[i + 1] * ac.maps[i];
    if (!prod.is_zero()) return std::make_pair(static_cast<int>(i), std::move(prod));
  }
  return std::nullopt;
}

GradedAbelianGroup homology(const AssembledComplex& ac) {
  GradedAbelianGroup out;
  if (ac.max_degree < 0) return out;
  if (auto defect = composite_defect(ac)) {
    std::ostringstream os;
    os << "consecutive differentials at index " << defect->first << " do not compose to zero";
    throw NotAComplex(os.str());
  }
  std::vector<SmithNormalForm> snfs;
  snfs.reserve(ac.maps.size());
  for (const auto& m : ac.maps) snfs.push_back(smith_normal_form(m));

  for (int n = 0; n <= ac.max_degree; ++n) {
    // incoming = the map landing in degree n, outgoing = the map leaving it
    const SmithNormalForm* incoming = nullptr;
    const SmithNormalForm* outgoing = nullptr;
    if (ac.variance == Variance::Chain) {
      if (n < ac.max_degree) incoming = &snfs[static_cast<std::size_t>(n)];
      if (n >= 1) outgoing = &snfs[static_cast<std::size_t>(n - 1)];
    } else {
      if (n >= 1) incoming = &snfs[static_cast<std::size_t>(n - 1)];
      if (n < ac.max_degree) outgoing = &snfs[static_cast<std::size_t>(n)];
    }
    AbelianGroupClass comp;
    long m = static_cast<long>(ac.ranks[static_cast<std::size_t>(n)]);
    long s = incoming ? static_cast<long>(incoming->rank()) : 0;
    long r = outgoing ? static_cast<long>(outgoing->rank()) : 0;
    comp.free_rank = m - s - r;
    if (comp.free_rank < 0) throw Error("internal: negative free rank");
    if (incoming)
      for (const auto& d : incoming->divisors)
        if (d > 1) comp.torsion.push_back(d);
    out.components.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Enumerates k-subsets; calls fn with each index vector.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    if (idx[i] == i + n - k) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial_estimate(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

}  // namespace

TorsionFreeReport torsion_free_criterion(const AssembledComplex& ac, std::size_t minor_cap) {
  TorsionFreeReport report;
  if (ac.max_degree < 1) {
    report.status = TorsionFreeStatus::TorsionFree;
    report.witness = "no differential out of degree zero";
    return report;
  }
  const IntegerMatrix& d = ac.maps[0];
  // vertex blocks: the degree-0 side of the degree-0-to-1 differential
  const auto& vblocks = ac.blocks[0];
  const bool vertices_are_cols = (ac.variance == Variance::Cochain);
  const std::size_t other =
      vertices_are_cols ? d.rows() : d.cols();

  constexpr double kMinorBudget = 2e6;
  bool budget_hit = false;
  for (const auto& vb : vblocks) {
    if (vb.size > minor_cap) {
      budget_hit = true;
      report.witness = "vertex block " + vb.cell_id + " has " + std::to_string(vb.size) +
                       " columns, cap " + std::to_string(minor_cap);
      continue;
    }
    std::size_t kmax = std::min(vb.size, other);
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (binomial_estimate(vb.size, k) * binomial_estimate(other, k) > kMinorBudget) {
        budget_hit = true;
        report.witness = "vertex block " + vb.cell_id + ": minor enumeration exceeds budget";
        break;
      }
      bool failed = false;
      std::string witness;
      for_each_subset(vb.size, k, [&](const std::vector<std::size_t>& vsub) {
        if (failed) return;
        std::vector<std::size_t> vidx;
        for (auto i : vsub) vidx.push_back(vb.offset + i);
        for_each_subset(other, k, [&](const std::vector<std::size_t>& osub) {
          if (failed) return;
          std::vector<std::size_t> oidx(osub.begin(), osub.end());
          IntegerMatrix sub = vertices_are_cols ? d.submatrix(oidx, vidx)
                                                : d.submatrix(vidx, oidx);
          Integer det = sub.determinant();
          if (det > 1 || det < -1) {
            failed = true;
            std::ostringstream os;
            os << "vertex block " << vb.cell_id << ": a " << k << "x" << k
               << " minor equals " << det;
            witness = os.str();
          }
        });
      });
      if (failed) {
        report.status = TorsionFreeStatus::CriterionFails;
        report.witness = witness;
        return report;
      }
    }
  }
  report.status = budget_hit ? TorsionFreeStatus::Inconclusive : TorsionFreeStatus::TorsionFree;
  if (!budget_hit) report.witness = "all vertex-block minors lie in {-1, 0, 1}";
  return report;
}

}  // namespace bredon
