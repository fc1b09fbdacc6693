#include "bredon/complex.hpp"

#include <algorithm>

#include "bredon/errors.hpp"

namespace bredon {

int EquivariantCellComplex::dimension() const {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c.dim);
  return d;
}

const CellOrbit* EquivariantCellComplex::find_cell(const std::string& id) const {
  for (const auto& c : cells)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<const CellOrbit*> EquivariantCellComplex::cells_of_dim(int d) const {
  std::vector<const CellOrbit*> out;
  for (const auto& c : cells)
    if (c.dim == d) out.push_back(&c);
  return out;
}

bool EquivariantCellComplex::has_extensions_for_all_stabilizers() const {
  for (const auto& c : cells)
    if (!extensions.count(c.stabilizer_name)) return false;
  return !cells.empty();
}

bool EquivariantCellComplex::operator==(const EquivariantCellComplex& rhs) const {
  if (group_order != rhs.group_order) return false;
  for (const auto& nm : group_order) {
    auto a = groups.at(nm);
    auto b = rhs.groups.at(nm);
    if (a->mul_table() != b->mul_table()) return false;
  }
  if (extensions.size() != rhs.extensions.size()) return false;
  for (const auto& [nm, ext] : extensions) {
    auto it = rhs.extensions.find(nm);
    if (it == rhs.extensions.end()) return false;
    if (ext.center_gen != it->second.center_gen || ext.n != it->second.n) return false;
  }
  if (cells.size() != rhs.cells.size() || incidences.size() != rhs.incidences.size())
    return false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& a = cells[i];
    const auto& b = rhs.cells[i];
    if (a.id != b.id || a.dim != b.dim || a.stabilizer_name != b.stabilizer_name) return false;
  }
  for (std::size_t i = 0; i < incidences.size(); ++i) {
    const auto& a = incidences[i];
    const auto& b = rhs.incidences[i];
    if (a.from != b.from || a.to != b.to || a.coeff != b.coeff ||
        a.hom.images != b.hom.images)
      return false;
  }
  return true;
}

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

EquivariantCellComplex product_complex(const EquivariantCellComplex& x,
                                       const EquivariantCellComplex& y,
                                       std::size_t group_cap) {
  EquivariantCellComplex p;
  p.name = x.name + "x" + y.name;

  auto product_stab = [&](const CellOrbit& a, const CellOrbit& b) -> GroupPtr {
    std::string nm = a.stabilizer_name + "x" + b.stabilizer_name;
    auto it = p.groups.find(nm);
    if (it != p.groups.end()) return it->second;
    auto prod = direct_product(a.stabilizer, b.stabilizer, group_cap);
    p.group_order.push_back(nm);
    auto named = std::make_shared<FiniteGroup>(*prod.group);
    named->name = nm;
    p.groups.emplace(nm, std::move(named));
    return p.groups.at(nm);
  };

  auto cell_id = [](const CellOrbit& a, const CellOrbit& b) { return a.id + "*" + b.id; };

  for (const auto& a : x.cells)
    for (const auto& b : y.cells) {
      CellOrbit c;
      c.id = cell_id(a, b);
      c.dim = a.dim + b.dim;
      c.stabilizer = product_stab(a, b);
      c.stabilizer_name = c.stabilizer->name;
      p.cells.push_back(std::move(c));
    }

  auto product_hom = [&](const GroupPtr& src, const GroupPtr& dst,
                         const GroupHomomorphism& h1, std::size_t right_src_order,
                         const GroupHomomorphism& h2,
                         std::size_t right_dst_order) -> GroupHomomorphism {
    GroupHomomorphism h{src, dst, {}};
    h.images.resize(src->order());
    for (std::size_t i = 0; i < src->order(); ++i) {
      std::size_t a = i / right_src_order, b = i % right_src_order;
      h.images[i] = h1.images[a] * static_cast<int>(right_dst_order) + h2.images[b];
    }
    return h;
  };

  for (const auto& inc : x.incidences) {
    const CellOrbit* fa = x.find_cell(inc.from);
    const CellOrbit* ta = x.find_cell(inc.to);
    for (const auto& b : y.cells) {
      Incidence out;
      out.from = cell_id(*fa, b);
      out.to = cell_id(*ta, b);
      out.coeff = inc.coeff;
      auto idb = identity_homomorphism(b.stabilizer);
      out.hom = product_hom(p.find_cell(out.from)->stabilizer,
                            p.find_cell(out.to)->stabilizer, inc.hom,
                            b.stabilizer->order(), idb, b.stabilizer->order());
      p.incidences.push_back(std::move(out));
    }
  }
  for (const auto& a : x.cells) {
    auto ida = identity_homomorphism(a.stabilizer);
    Integer sign = (a.dim % 2 == 0) ? 1 : -1;
    for (const auto& inc : y.incidences) {
      const CellOrbit* fb = y.find_cell(inc.from);
      const CellOrbit* tb = y.find_cell(inc.to);
      Incidence out;
      out.from = cell_id(a, *fb);
      out.to = cell_id(a, *tb);
      out.coeff = sign * inc.coeff;
      out.hom = product_hom(p.find_cell(out.from)->stabilizer,
                            p.find_cell(out.to)->stabilizer, ida,
                            fb->stabilizer->order(), inc.hom, tb->stabilizer->order());
      p.incidences.push_back(std::move(out));
    }
  }
  return p;
}

EulerData euler_data(const EquivariantCellComplex& x, const CoefficientSystem& sys) {
  EulerData out;
  int dim = x.dimension();
  out.orbit_counts.assign(static_cast<std::size_t>(dim + 1), 0);
  out.ranks.assign(static_cast<std::size_t>(dim + 1), 0);
  for (const auto& c : x.cells) {
    out.orbit_counts[static_cast<std::size_t>(c.dim)] += 1;
    out.ranks[static_cast<std::size_t>(c.dim)] += sys.evaluate(c.stabilizer).rank;
  }
  for (int n = 0; n <= dim; ++n) {
    long r = static_cast<long>(out.ranks[static_cast<std::size_t>(n)]);
    out.alternating_sum += (n % 2 == 0) ? r : -r;
  }
  return out;
}

}  // namespace bredon
