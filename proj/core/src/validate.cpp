#include <set>
#include <sstream>

#include "bredon/complex.hpp"
#include "bredon/errors.hpp"
#include "bredon/homology.hpp"

namespace bredon {

namespace {

ValidationCheck dsquare_check(const EquivariantCellComplex& x, const CoefficientSystem& sys,
                              const std::string& label) {
  ValidationCheck out{label, false, ""};
  try {
    auto chain = assemble_chain(x, sys);
    if (auto defect = composite_defect(chain)) {
      std::ostringstream os;
      os << "chain composite into degree " << defect->first << " is nonzero";
      for (std::size_t i = 0; i < defect->second.rows(); ++i)
        for (std::size_t j = 0; j < defect->second.cols(); ++j)
          if (defect->second.at(i, j) != 0) {
            os << " (entry " << i << "," << j << " = " << defect->second.at(i, j) << ")";
            out.detail = os.str();
            return out;
          }
    }
    auto cochain = assemble_cochain(x, sys);
    if (auto defect = composite_defect(cochain)) {
      std::ostringstream os;
      os << "cochain composite out of degree " << defect->first << " is nonzero";
      out.detail = os.str();
      return out;
    }
    out.pass = true;
  } catch (const Error& e) {
    out.detail = e.what();
  }
  return out;
}

}  // namespace

ValidationReport validate(const EquivariantCellComplex& x, std::size_t group_cap) {
  ValidationReport report;

  {
    ValidationCheck c{"cell-ids-unique", true, ""};
    std::set<std::string> seen;
    for (const auto& cell : x.cells)
      if (!seen.insert(cell.id).second) {
        c.pass = false;
        c.detail = "duplicate cell id " + cell.id;
      }
    report.checks.push_back(c);
  }
  {
    ValidationCheck c{"stabilizers-resolved", true, ""};
    for (const auto& cell : x.cells)
      if (!cell.stabilizer || !x.groups.count(cell.stabilizer_name)) {
        c.pass = false;
        c.detail = "cell " + cell.id + " has unresolved stabilizer";
      }
    report.checks.push_back(c);
  }
  {
    ValidationCheck c{"incidence-dimensions", true, ""};
    for (const auto& inc : x.incidences) {
      const CellOrbit* f = x.find_cell(inc.from);
      const CellOrbit* t = x.find_cell(inc.to);
      if (!f || !t || f->dim != t->dim + 1) {
        c.pass = false;
        c.detail = "incidence " + inc.from + " -> " + inc.to + " violates dimensions";
        break;
      }
    }
    report.checks.push_back(c);
  }
  {
    ValidationCheck c{"homomorphisms-verified", true, ""};
    for (const auto& inc : x.incidences) {
      if (auto bad = inc.hom.first_violation()) {
        c.pass = false;
        c.detail = "incidence " + inc.from + " -> " + inc.to + " violates at pair (" +
                   std::to_string(bad->first) + "," + std::to_string(bad->second) + ")";
        break;
      }
      if (!inc.hom.is_injective()) {
        c.pass = false;
        c.detail = "incidence " + inc.from + " -> " + inc.to + " is not injective";
        break;
      }
    }
    report.checks.push_back(c);
  }
  {
    ValidationCheck c{"extensions-valid", true, x.extensions.empty() ? "none declared" : ""};
    for (const auto& [nm, ext] : x.extensions) {
      try {
        validate_extension(ext);
      } catch (const Error& e) {
        c.pass = false;
        c.detail = e.what();
        break;
      }
    }
    report.checks.push_back(c);
  }

  report.checks.push_back(dsquare_check(x, *make_constant_system(), "dsquare-constant"));
  report.checks.push_back(dsquare_check(x, *make_rep_ring_system(group_cap), "dsquare-rep"));
  report.checks.push_back(
      dsquare_check(x, *make_burnside_system(group_cap), "dsquare-burnside"));
  if (x.has_extensions_for_all_stabilizers())
    report.checks.push_back(dsquare_check(
        x, *make_k_central_system(x.extensions, 1, group_cap), "dsquare-kcentral-1"));

  return report;
}

}  // namespace bredon
