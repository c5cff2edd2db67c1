#include <doctest.h>

#include "vvmf/cases.hpp"
#include "vvmf/lifts.hpp"

using namespace vvmf;

namespace {

const std::filesystem::path kFixtures = VVMF_FIXTURE_DIR;

VVForm fixture(const std::string& ref) { return load_form_file(fixture_path(kFixtures, ref)); }

std::string summary(const std::string& ref) {
  const PrincipalPart p = principal_part(fixture(ref));
  return divisor_summary(borcherds_divisor(p, singular_extent(p)));
}

}  // namespace

TEST_CASE("Borcherds weights and divisors") {
  CHECK(borcherds_weight(principal_part(fixture("d7/F-1"))) == Frac(7));
  CHECK(summary("d7/F-1") == "H(1/7)=3 H(2/7)=1");
  CHECK(summary("d7/G-1") == "H(1/7)=7 H(1)=1");
  CHECK(summary("d8/F-1") == "H(1/8)=2 H(1/4)=1");
  CHECK(summary("d8/H-1") == "H(1/8)=8 H(1/4)=1 H(1)=1");
  CHECK(summary("d11/G-1") == "H(1/11)=-3 H(4/11)=1");
  CHECK(summary("d4/F-1") == "H(1/4)=1");
}

TEST_CASE("fold-down terms only appear up to the requested norm") {
  const PrincipalPart p = principal_part(fixture("d8/H-1"));
  CHECK(singular_extent(p) == Frac(1));
  CHECK(divisor_summary(borcherds_divisor(p, Frac(1, 4))) == "H(1/8)=8 H(1/4)=1");
  CHECK(divisor_summary(borcherds_divisor(p, Frac(1, 8))) == "H(1/8)=8");
}

TEST_CASE("discriminant -15 components carry different multiplicities") {
  const VVForm f = fixture("d15/F-1");
  const PrincipalPart p = principal_part(f);
  const HeegnerDivisor div = borcherds_divisor(p, singular_extent(p));
  const auto at = div.at(Frac(1, 15));
  REQUIRE(at.size() == 2);
  const std::size_t a = f.disc->index_of(parse_coords("0,0,1/15,-2/15,0,0"));
  const std::size_t b = f.disc->index_of(parse_coords("0,0,4/15,-8/15,0,0"));
  for (const auto& e : at) {
    if (e.component.rep == std::min(a, f.disc->neg_index(a))) CHECK(e.multiplicity == Frac(-3));
    if (e.component.rep == std::min(b, f.disc->neg_index(b))) CHECK(e.multiplicity == Frac(7));
  }
}

TEST_CASE("empty principal part") {
  const DiscPtr disc = make_disc(hermitian_lattice(7));
  const PrincipalPart p = principal_part(VVForm::zero(disc, Frac(-1), Rep::rho, Frac(1)));
  const LiftMeta meta = borcherds_meta(p);
  CHECK(meta.weight == Frac(0));
  CHECK(meta.divisor.entries.empty());
  CHECK(meta.divisor.str() == "0");
}

TEST_CASE("non-integral principal parts have no product") {
  const DiscPtr disc = make_disc(hermitian_lattice(7));
  VVForm f = VVForm::zero(disc, Frac(-1), Rep::rho, Frac(1));
  f.add_term(0, Frac(-1), Frac(1, 2));
  CHECK_THROWS_AS(borcherds_divisor(principal_part(f), Frac(1)), std::domain_error);
}

TEST_CASE("singular additive lifts") {
  const LiftMeta phi3 = additive_lift_meta(fixture("d7/F2"), 4);
  CHECK(phi3.kind == LiftKind::additive);
  CHECK(phi3.weight == Frac(3));
  CHECK(phi3.pole_order == 3);
  CHECK(divisor_summary(phi3.divisor, false) == "H(1/7)");
  CHECK(additive_lift_meta(fixture("d11/F1"), 4).weight == Frac(2));
  CHECK(additive_lift_meta(fixture("d24/F0"), 4).weight == Frac(1));
  CHECK_THROWS(additive_lift_meta(fixture("d7/F-1"), 4));   // weight 0 lift
  CHECK_THROWS(additive_lift_meta(fixture("d7/F-1"), 3));   // half-integral weight
}

TEST_CASE("Jacobian weights") {
  CHECK(jacobian_weight({2, 4, 6, 8, 10}, 4) == Frac(34));
  CHECK(jacobian_weight({}, 4) == Frac(4));
  CHECK(minimal_jacobian_weight() == Frac(13));
}

TEST_CASE("classification solves m = d") {
  for (const std::int64_t d : {7, 8, 11, 15, 19, 20, 23, 24}) {
    CAPTURE(d);
    const ClassifyResult r = classify_siegel(d);
    CHECK(r.m == Frac(static_cast<long>(d)));
    CHECK(r.wt_j == Frac(static_cast<long>(35 - d)));
    CHECK(r.feasible == (d <= 22));
    CHECK(r.base_pairing == Frac(-2));
  }
  CHECK_THROWS_AS(classify_siegel(3), std::invalid_argument);
  CHECK_THROWS_AS(classify_siegel(4), std::invalid_argument);
  CHECK_THROWS(classify_siegel(5));
}

TEST_CASE("table of Jacobian weights") {
  std::vector<Table1Row> rows{{7, {2, 3, 4, 7, 8}, principal_part(fixture("d7/G-1"))}};
  CHECK(verify_table1(rows).ok());
  rows.push_back({8, {2, 3, 4, 6, 9}, principal_part(fixture("d8/H-1"))});
  CHECK_FALSE(verify_table1(rows).ok());
}
