#pragma once

// Verification cases over the fixture directory.
//
// Fixture layout: <fixtures>/dN/<form>.vv (vector-valued) or <form>.bb
// (scalar, lifted onto the Hermitian lattice of discriminant N), a
// checks.txt per directory, and table1.txt at the top level.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/lifts.hpp"
#include "vvmf/textio.hpp"

namespace vvmf {

/// d4 ... d24, weil, serre, contract, classify, table1.
const std::vector<std::string>& case_names();
/// Runs one case; throws std::invalid_argument for an unknown name.
Report verify_case(const std::string& name, const std::filesystem::path& fixtures);
/// Every case in case_names() order.
Report verify_all(const std::filesystem::path& fixtures);

/// Scalar form lifted onto `lattice`, which must have |D| = s.p.
VVForm lift_scalar(const ScalarForm& s, const EvenLattice& lattice);
/// Reads a .vv file, or a .bb file lifted onto hermitian_lattice(p).
VVForm load_form_file(const std::filesystem::path& path);
/// "d7/F-1" -> <fixtures>/d7/F-1.vv or .bb.
std::filesystem::path fixture_path(const std::filesystem::path& fixtures, const std::string& ref);

/// Entry of a divisor summary. `rep` is empty when every +-pair of H(m)
/// carries the same value.
struct DivisorTerm {
  Frac m;
  std::optional<std::size_t> rep;
  std::optional<Frac> value;
};
/// Groups a divisor by m: "H(1/4)=1 H(1)=1" or "H(1/15;1/15,13/15,...)=-3 ...".
std::string divisor_summary(const HeegnerDivisor& div, bool with_values = true);
/// Parses "H(m)=k" / "H(m;c1,...,cn)=k" (the "=k" part optional).
DivisorTerm parse_divisor_term(const DiscriminantForm& d, const std::string& token);
std::string render_divisor_terms(const DiscriminantForm& d, std::vector<DivisorTerm> terms);

}  // namespace vvmf
