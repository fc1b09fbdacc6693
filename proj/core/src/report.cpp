#include "bredon/report.hpp"

#include <iomanip>
#include <sstream>

#include "bredon/numeric.hpp"

namespace bredon {

std::string input_hash_of(const std::string& bytes) {
  std::uint64_t h = fnv1a64(bytes.data(), bytes.size());
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string torsion_str(const std::vector<Integer>& torsion) {
  if (torsion.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) os << ",";
    os << torsion[i];
  }
  return os.str();
}

std::string to_text(const ResultRecord& r) {
  std::ostringstream os;
  os << r.command << " with " << r.coefficients << " coefficients\n";
  for (long n = r.degree_lo; n <= r.degree_hi; ++n) {
    const auto& c = r.groups.at(static_cast<std::size_t>(n));
    os << "  degree " << n << ": " << c.str() << "\n";
  }
  os << "  time: " << r.elapsed_ms << " ms\n";
  return os.str();
}

std::string to_machine(const ResultRecord& r) {
  std::ostringstream os;
  os << kMachineHeader << "\n";
  os << "command " << r.command << "\n";
  os << "input " << r.input_hash << "\n";
  os << "coefficients " << r.coefficients << "\n";
  os << "degrees " << r.degree_lo << ".." << r.degree_hi << "\n";
  for (long n = r.degree_lo; n <= r.degree_hi; ++n) {
    const auto& c = r.groups.at(static_cast<std::size_t>(n));
    os << "degree " << n << " free " << c.free_rank << " torsion " << torsion_str(c.torsion)
       << "\n";
  }
  os << "end\n";
  return os.str();
}

namespace {
const char* collapse_str(CollapseStatus s) {
  return s == CollapseStatus::CollapsesForDimensionReasons ? "dimension-reasons" : "unknown";
}
}  // namespace

std::string e2_to_text(const E2Page& page, const std::string&) {
  std::ostringstream os;
  os << "E2 page (rows 2-periodic in q; odd rows vanish)\n";
  os << "  q odd : all zero\n";
  os << "  q even:";
  for (int p = 0; p <= page.dim; ++p)
    os << "  [p=" << p << "] " << page.even_row.at(static_cast<std::size_t>(p)).str();
  if (page.dim < 0) os << "  (empty complex)";
  os << "\n";
  os << "  collapse: " << collapse_str(page.collapse) << "\n";
  if (!page.note.empty()) os << "  note: " << page.note << "\n";
  if (auto k = k_theory_ranks_if_collapse(page)) {
    os << "  K-rank even: " << k->even << " (torsion " << torsion_str(k->even_torsion)
       << ")\n";
    os << "  K-rank odd:  " << k->odd << " (torsion " << torsion_str(k->odd_torsion) << ")\n";
    os << "  caveat: " << k->caveat << "\n";
  }
  return os.str();
}

std::string e2_to_machine(const E2Page& page, const std::string& input_hash) {
  std::ostringstream os;
  os << kMachineHeader << "\n";
  os << "command e2\n";
  os << "input " << input_hash << "\n";
  os << "dim " << page.dim << "\n";
  for (int p = 0; p <= page.dim; ++p) {
    const auto& c = page.even_row.at(static_cast<std::size_t>(p));
    os << "entry p=" << p << " parity=even free=" << c.free_rank
       << " torsion=" << torsion_str(c.torsion) << "\n";
    os << "entry p=" << p << " parity=odd free=0 torsion=-\n";
  }
  os << "collapse " << collapse_str(page.collapse) << "\n";
  if (!page.note.empty()) os << "note " << page.note << "\n";
  if (auto k = k_theory_ranks_if_collapse(page)) {
    os << "k-even " << k->even << " torsion " << torsion_str(k->even_torsion) << "\n";
    os << "k-odd " << k->odd << " torsion " << torsion_str(k->odd_torsion) << "\n";
  }
  os << "end\n";
  return os.str();
}

std::string chartable_to_text(const CharacterTable& t) {
  std::ostringstream os;
  os << "character table of " << t.group->name << " (order " << t.group->order() << ", "
     << t.num_classes() << " classes, type " << iso_label(*t.group) << ")\n";
  os << "  class sizes:";
  for (const auto& c : t.classes.members) os << " " << c.size();
  os << "\n  class rep orders:";
  for (int r : t.classes.representative) os << " " << t.group->element_order(r);
  os << "\n";
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
    os << "  irr " << i << " (degree " << t.degrees[i] << "):";
    for (const auto& v : t.irreducibles[i]) os << " " << v.str();
    os << "\n";
  }
  return os.str();
}

std::string chartable_to_machine(const CharacterTable& t) {
  std::ostringstream os;
  os << "group " << t.group->name << " order " << t.group->order() << " classes "
     << t.num_classes() << "\n";
  for (std::size_t j = 0; j < t.num_classes(); ++j)
    os << "class " << j << " size " << t.classes.members[j].size() << " rep "
       << t.classes.representative[j] << " rep-order "
       << t.group->element_order(t.classes.representative[j]) << "\n";
  for (std::size_t i = 0; i < t.num_irreducibles(); ++i) {
    os << "irr " << i << " degree " << t.degrees[i] << " values ";
    for (std::size_t j = 0; j < t.num_classes(); ++j) {
      if (j) os << ",";
      os << t.irreducibles[i][j].str();
    }
    os << "\n";
  }
  return os.str();
}

std::string validation_to_text(const ValidationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace bredon
