#pragma once

// Text formats for vector-valued forms and scalar level-p inputs.
//
// Vector-valued form:
//   gram                      (followed by the rows of the Gram matrix)
//   weight -1
//   rep rho                   (or rho*)
//   prec 1/4
//   coset 0 0 0 1/4 0 0       (any representative; reduced mod 1)
//   -1/8 8                    ("exponent coefficient")
//   eta 8 2:14 1:-12 4:-4     (adds 8 eta(2t)^14 eta(t)^-12 eta(4t)^-4)
//
// Scalar form for the level-p correspondence:
//   p 7
//   weight -1
//   prec 6
//   -2 2
//   ...
//
// '#' starts a comment.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "vvmf/weilrep.hpp"

namespace vvmf {

struct ScalarForm {
  std::int64_t p = 0;
  Frac weight;
  FracSeries series{Frac(0)};
};

VVForm read_vvform(std::istream& is);
void write_vvform(std::ostream& os, const VVForm& f);
ScalarForm read_scalar_form(std::istream& is);

VVForm read_vvform_file(const std::filesystem::path& path);
ScalarForm read_scalar_form_file(const std::filesystem::path& path);

/// "q^-1 + 70 + 8*q^1/2"; the zero series prints as "0".
std::string series_str(const FracSeries& f);
/// Parses "a,b,c" into rationals.
RatVector parse_coords(const std::string& text);

}  // namespace vvmf
