// Command-line driver: homology / cohomology / e2 / check / kunneth /
// chartable / show over .gcw complex files.
//
// Exit codes: 0 success, 1 parse error, 2 validation or check failure,
// 3 cap exceeded, 4 coefficient system mismatch.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bredon/ahss.hpp"
#include "bredon/errors.hpp"
#include "bredon/gcw_io.hpp"
#include "bredon/report.hpp"
#include "bredon/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitCoefficients = 4;

struct Options {
  std::string coefficients = "constant";
  std::string degrees;
  std::string format = "text";
  std::size_t group_cap = 200;
  std::size_t minor_cap = 12;
};

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  return static_cast<std::size_t>(std::stoul(v));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bredon::Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bredon::CoefficientSystemPtr make_system(const std::string& spec,
                                         const bredon::EquivariantCellComplex& x,
                                         std::size_t cap) {
  if (spec == "constant") return bredon::make_constant_system();
  if (spec == "rep") return bredon::make_rep_ring_system(cap);
  if (spec == "burnside") return bredon::make_burnside_system(cap);
  if (spec.rfind("kcentral:", 0) == 0) {
    long k = std::stol(spec.substr(9));
    return bredon::make_k_central_system(x.extensions, k, cap);
  }
  throw bredon::Error("unknown coefficient system '" + spec + "'");
}

std::pair<long, long> parse_degree_range(const std::string& s, int dim) {
  if (s.empty()) return {0, std::max(dim, 0)};
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    long d = std::stol(s);
    return {d, d};
  }
  return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

int run_graded(const std::string& command, const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  std::string bytes = read_file(path);
  auto x = bredon::parse_complex(bytes, opt.group_cap);
  auto sys = make_system(opt.coefficients, x, opt.group_cap);

  bredon::AssembledComplex ac = (command == "homology")
                                    ? bredon::assemble_chain(x, *sys)
                                    : bredon::assemble_cochain(x, *sys);
  bredon::ResultRecord rec;
  rec.command = command;
  rec.input_hash = bredon::input_hash_of(bytes);
  rec.coefficients = sys->name();
  rec.groups = bredon::homology(ac);
  std::tie(rec.degree_lo, rec.degree_hi) = parse_degree_range(opt.degrees, x.dimension());
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  std::cout << (opt.format == "machine" ? bredon::to_machine(rec) : bredon::to_text(rec));
  return kExitOk;
}

int run_check(const std::string& path, const std::string& kind, const Options& opt) {
  std::string bytes = read_file(path);
  auto x = bredon::parse_complex(bytes, opt.group_cap);
  if (kind == "dsquare") {
    auto report = bredon::validate(x, opt.group_cap);
    std::cout << "check dsquare " << (report.all_pass() ? "pass" : "fail") << "\n";
    std::cout << bredon::validation_to_text(report);
    return report.all_pass() ? kExitOk : kExitValidation;
  }
  if (kind == "uct") {
    auto sys = make_system(opt.coefficients == "constant" ? "rep" : opt.coefficients, x,
                           opt.group_cap);
    auto report = bredon::uct_check(x, *sys);
    std::cout << "check uct " << (report.overall ? "pass" : "fail") << "\n";
    for (std::size_t n = 0; n < report.degrees.size(); ++n) {
      const auto& d = report.degrees[n];
      std::cout << "  degree " << n << ": H_n=" << d.homology_here.str()
                << " H^n=" << d.cohomology.str() << " rank "
                << (d.rank_match ? "ok" : "MISMATCH") << ", torsion "
                << (d.torsion_match ? "ok" : "MISMATCH") << "\n";
    }
    return report.overall ? kExitOk : kExitValidation;
  }
  if (kind == "torsionfree") {
    auto sys = make_system(opt.coefficients, x, opt.group_cap);
    auto cochain = bredon::assemble_cochain(x, *sys);
    auto report = bredon::torsion_free_criterion(cochain, opt.minor_cap);
    const char* status = report.status == bredon::TorsionFreeStatus::TorsionFree
                             ? "torsion-free"
                             : report.status == bredon::TorsionFreeStatus::Inconclusive
                                   ? "inconclusive"
                                   : "criterion-fails";
    std::cout << "check torsionfree " << status << "\n";
    if (!report.witness.empty()) std::cout << "  " << report.witness << "\n";
    return kExitOk;
  }
  throw bredon::Error("unknown check '" + kind + "'");
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact Bredon homology and cohomology of proper G-CW complexes"};
  app.require_subcommand(1);
  Options opt;
  opt.group_cap = env_or("BREDON_GROUP_CAP", 200);
  opt.minor_cap = env_or("BREDON_MINOR_CAP", 12);

  // flags win over environment variables
  app.add_option("--group-cap", opt.group_cap, "largest allowed finite group order");
  app.add_option("--minor-cap", opt.minor_cap, "largest vertex block for minor enumeration");

  std::string file, file2, check_kind, group_name;

  auto add_common = [&](CLI::App* sub, bool with_coeff) {
    sub->add_option("file", file, "input .gcw file")->required();
    if (with_coeff)
      sub->add_option("--coefficients", opt.coefficients,
                      "constant | rep | burnside | kcentral:<k>");
    sub->add_option("--format", opt.format, "text | machine");
  };

  auto* hom = app.add_subcommand("homology", "Bredon homology of a complex");
  add_common(hom, true);
  hom->add_option("--degrees", opt.degrees, "degree range a..b");

  auto* coh = app.add_subcommand("cohomology", "Bredon cohomology of a complex");
  add_common(coh, true);
  coh->add_option("--degrees", opt.degrees, "degree range a..b");

  auto* e2 = app.add_subcommand("e2", "AHSS E2 page for equivariant K-theory");
  add_common(e2, false);

  auto* check = app.add_subcommand("check", "run a verification");
  check->add_option("file", file, "input .gcw file")->required();
  check->add_option("kind", check_kind, "dsquare | uct | torsionfree")->required();
  check->add_option("--coefficients", opt.coefficients,
                    "system for uct/torsionfree (default rep/constant)");

  auto* kun = app.add_subcommand("kunneth", "Kunneth check on a product");
  kun->add_option("fileA", file, "first .gcw file")->required();
  kun->add_option("fileB", file2, "second .gcw file")->required();
  kun->add_option("--coefficients", opt.coefficients, "constant | rep");

  auto* chart = app.add_subcommand("chartable", "character tables of the groups in a file");
  chart->add_option("file", file, "input .gcw file")->required();
  chart->add_option("--group", group_name, "only this group");
  chart->add_option("--format", opt.format, "text | machine");

  auto* show = app.add_subcommand("show", "canonical serialization of a parsed complex");
  show->add_option("file", file, "input .gcw file")->required();

  CLI11_PARSE(app, argc, argv);

  if (hom->parsed()) return run_graded("homology", file, opt);
  if (coh->parsed()) return run_graded("cohomology", file, opt);

  if (e2->parsed()) {
    std::string bytes = read_file(file);
    auto x = bredon::parse_complex(bytes, opt.group_cap);
    auto page = bredon::e2_page(x, opt.group_cap);
    auto hash = bredon::input_hash_of(bytes);
    std::cout << (opt.format == "machine" ? bredon::e2_to_machine(page, hash)
                                          : bredon::e2_to_text(page, hash));
    return kExitOk;
  }
  if (check->parsed()) return run_check(file, check_kind, opt);
  if (kun->parsed()) {
    if (opt.coefficients != "constant" && opt.coefficients != "rep")
      throw bredon::Error("kunneth supports constant or rep coefficients");
    auto x = bredon::parse_complex(read_file(file), opt.group_cap);
    auto y = bredon::parse_complex(read_file(file2), opt.group_cap);
    auto sys = make_system(opt.coefficients, x, opt.group_cap);
    auto report = bredon::kunneth_check(x, y, *sys, opt.group_cap);
    std::cout << "kunneth " << (report.overall ? "pass" : "fail") << "\n";
    for (std::size_t n = 0; n < report.degrees.size(); ++n)
      std::cout << "  degree " << n << ": predicted " << report.degrees[n].predicted.str()
                << ", computed " << report.degrees[n].computed.str() << "\n";
    return report.overall ? kExitOk : kExitValidation;
  }
  if (chart->parsed()) {
    auto x = bredon::parse_complex(read_file(file), opt.group_cap);
    bool machine = opt.format == "machine";
    if (machine) std::cout << bredon::kMachineHeader << "\ncommand chartable\n";
    for (const auto& nm : x.group_order) {
      if (!group_name.empty() && nm != group_name) continue;
      auto t = bredon::character_table(x.groups.at(nm), opt.group_cap);
      std::cout << (machine ? bredon::chartable_to_machine(*t)
                            : bredon::chartable_to_text(*t));
    }
    if (machine) std::cout << "end\n";
    return kExitOk;
  }
  if (show->parsed()) {
    auto x = bredon::parse_complex(read_file(file), opt.group_cap);
    std::cout << bredon::serialize_complex(x);
    return kExitOk;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const bredon::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const bredon::ClosureExceedsCap& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const bredon::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const bredon::MissingExtensionData& e) {
    std::cerr << "coefficient mismatch: " << e.what() << "\n";
    return kExitCoefficients;
  } catch (const bredon::ExtensionMismatch& e) {
    std::cerr << "coefficient mismatch: " << e.what() << "\n";
    return kExitCoefficients;
  } catch (const bredon::NonInjectiveHomomorphism& e) {
    std::cerr << "coefficient mismatch: " << e.what() << "\n";
    return kExitCoefficients;
  } catch (const bredon::ConditionDViolated& e) {
    std::cerr << "coefficient mismatch: " << e.what() << "\n";
    return kExitCoefficients;
  } catch (const bredon::NotAComplex& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const bredon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
