#include <doctest.h>

#include <fstream>
#include <sstream>

#include "vvmf/cases.hpp"

using namespace vvmf;

namespace {
const std::filesystem::path kFixtures = VVMF_FIXTURE_DIR;
}

TEST_CASE("vector-valued text round trip") {
  const VVForm f = load_form_file(fixture_path(kFixtures, "d4/F-1"));
  std::stringstream ss;
  write_vvform(ss, f);
  const VVForm g = read_vvform(ss);
  CHECK(g.weight == f.weight);
  CHECK(g.prec == f.prec);
  CHECK(g.components == f.components);
  CHECK(g.disc->lattice().gram() == f.disc->lattice().gram());
}

TEST_CASE("eta lines expand below the stored precision") {
  const VVForm f = load_form_file(fixture_path(kFixtures, "d4/F-1"));
  CHECK(series_str(f.components[0]) == "8");
  const std::size_t half = f.disc->index_of(parse_coords("0,0,1/2,1/2,0,0"));
  CHECK(series_str(f.components[half]) == "-32*q^1/2");
}

TEST_CASE("parse errors name the line") {
  std::istringstream bad("gram\n2\nweight 0\nprec 1\ncoset 0\n1 5\n");
  try {
    (void)read_vvform(bad);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 6") != std::string::npos);
  }
  std::istringstream early("coset 0\n");
  CHECK_THROWS(read_vvform(early));
  std::istringstream scalar("weight -1\n0 1\n");
  CHECK_THROWS(read_scalar_form(scalar));
}

TEST_CASE("series rendering") {
  CHECK(series_str(FracSeries(Frac(1))) == "0");
  CHECK(series_str(FracSeries(Frac(2), {{Frac(-1), Frac(1)}, {Frac(0), Frac(70)}, {Frac(1, 2), Frac(-3, 2)}})) ==
        "q^-1 + 70 - 3/2*q^1/2");
}

TEST_CASE("divisor terms") {
  const DiscriminantForm d(hermitian_lattice(15));
  const DivisorTerm t = parse_divisor_term(d, "H(1/15;0,0,-1/15,2/15,0,0)=-3");
  REQUIRE(t.rep.has_value());
  CHECK(render_divisor_terms(d, {t}) == "H(1/15;0,0,1/15,13/15,0,0)=-3");
  CHECK_THROWS(parse_divisor_term(d, "H(2/15;0,0,1/15,-2/15,0,0)=1"));
  CHECK_THROWS(parse_divisor_term(d, "X(1)"));
}

TEST_CASE("every verification case passes") {
  for (const auto& name : case_names()) {
    CAPTURE(name);
    const Report r = verify_case(name, kFixtures);
    CHECK(r.ok());
    CHECK(!r.checks().empty());
  }
  CHECK(verify_case("d7", kFixtures).checks().size() == 6);
  CHECK_THROWS(verify_case("d5", kFixtures));
}

TEST_CASE("reports are deterministic") {
  std::ostringstream a, b;
  verify_all(kFixtures).write_machine(a);
  verify_all(kFixtures).write_machine(b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("CHECK d4/", 0) == 0);
}

TEST_CASE("a corrupted fixture fails loudly") {
  const auto dir = std::filesystem::temp_directory_path() / "vvmf_bad_fixture";
  std::filesystem::remove_all(dir);
  std::filesystem::copy(kFixtures, dir, std::filesystem::copy_options::recursive);
  {
    std::ofstream out(dir / "d7" / "F-1.bb");
    out << "p 7\nweight -1\nprec 6\n-2 2\n-1 6\n0 16\n";
  }
  const Report r = verify_case("d7", dir);
  CHECK_FALSE(r.ok());
  CHECK(r.first_failure() == "d7/weight(F-1)");
  std::filesystem::remove_all(dir);
}
