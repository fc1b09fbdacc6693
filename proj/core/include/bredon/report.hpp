#ifndef BREDON_REPORT_HPP
#define BREDON_REPORT_HPP

#include <string>
#include <vector>

#include "bredon/ahss.hpp"
#include "bredon/character.hpp"
#include "bredon/complex.hpp"
#include "bredon/homology.hpp"

namespace bredon {

// Machine format: line-delimited records with a version header and stable
// key order; byte-identical across identical invocations (timing is text-only).
inline constexpr const char* kMachineHeader = "bredon.machine 1";

struct ResultRecord {
  std::string command;
  std::string input_hash;  // fnv1a64:<16 hex digits> of the input file bytes
  std::string coefficients;
  long degree_lo = 0;
  long degree_hi = -1;
  GradedAbelianGroup groups;
  double elapsed_ms = 0;  // never serialized into machine output
};

std::string input_hash_of(const std::string& bytes);

std::string torsion_str(const std::vector<Integer>& torsion);

std::string to_text(const ResultRecord& r);
std::string to_machine(const ResultRecord& r);

std::string e2_to_text(const E2Page& page, const std::string& input_hash);
std::string e2_to_machine(const E2Page& page, const std::string& input_hash);

std::string chartable_to_text(const CharacterTable& t);
std::string chartable_to_machine(const CharacterTable& t);

std::string validation_to_text(const ValidationReport& r);

}  // namespace bredon

#endif
