#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "vvmf/lattice.hpp"

using namespace vvmf;

namespace {

// Independent check of a coset list: |det| elements, pairwise distinct mod L,
// each in L' (G x integral), zero first.
void check_cosets(const EvenLattice& l, const DiscriminantForm& d) {
  const auto& g = l.gram();
  CHECK(static_cast<std::int64_t>(d.size()) == std::llabs(l.det()));
  CHECK(d.element(0).coords == RatVector(l.rank(), Frac(0)));
  std::set<RatVector> seen;
  for (const auto& c : d.elements()) {
    RatVector reduced;
    for (const auto& x : c.coords) reduced.push_back(x - Frac(static_cast<long>(x.floor())));
    CHECK(seen.insert(reduced).second);
    for (std::size_t i = 0; i < g.size(); ++i) {
      Frac s;
      for (std::size_t j = 0; j < g.size(); ++j) s += Frac(static_cast<long>(g[i][j])) * c.coords[j];
      CHECK(s.is_integer());
    }
  }
}

}  // namespace

TEST_CASE("Smith normal form") {
  const IntMatrix a{{2, 1, 0}, {1, 4, 0}, {0, 0, 6}};
  const SmithForm s = smith_normal_form(a);
  REQUIRE(s.divisors.size() == 3);
  auto mul = [](const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z(x.size(), std::vector<std::int64_t>(y[0].size(), 0));
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t k = 0; k < y.size(); ++k)
        for (std::size_t j = 0; j < y[0].size(); ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  const IntMatrix d = mul(mul(s.u, a), s.v);
  std::int64_t prod = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(d[i][j] == (i == j ? s.divisors[i] : 0));
    prod *= s.divisors[i];
    if (i + 1 < 3) CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
  }
  CHECK(prod == 42);
}

TEST_CASE("lattice validation") {
  CHECK_THROWS(EvenLattice(IntMatrix{{1, 0}, {0, 2}}));
  CHECK_THROWS(EvenLattice(IntMatrix{{2, 1}, {0, 2}}));
  CHECK_THROWS(EvenLattice(IntMatrix{{2, 2}, {2, 2}}));
  CHECK(EvenLattice(IntMatrix{{2, 1}, {1, 2}}).is_positive_definite());
  CHECK_FALSE(hermitian_lattice(7).is_positive_definite());
}

TEST_CASE("Hermitian lattices: order, level and signature against a complex Milgram sum") {
  for (const auto d : standard_discriminants()) {
    CAPTURE(d);
    const EvenLattice l = hermitian_lattice(d);
    const DiscriminantForm disc(l);
    check_cosets(l, disc);
    CHECK(static_cast<std::int64_t>(disc.size()) == d);
    const int sig = signature_mod8(disc);
    CHECK(sig == 2);
    const oracle::cplx gauss = oracle::milgram_sum(l.gram(), disc.elements());
    CHECK(std::abs(gauss - std::sqrt(static_cast<double>(d)) * oracle::e(sig / 8.0)) < 1e-9);
    for (std::size_t x = 0; x < disc.size(); ++x) {
      const double q = oracle::bilinear(l.gram(), disc.element(x).coords, disc.element(x).coords) / 2;
      CHECK(std::abs(oracle::to_double(disc.q(x)) - (q - std::floor(q + 1e-12))) < 1e-9);
    }
  }
}

TEST_CASE("signatures of small lattices") {
  CHECK(signature_mod8(DiscriminantForm(EvenLattice(IntMatrix{{0, 1}, {1, 0}}))) == 0);
  CHECK(signature_mod8(DiscriminantForm(EvenLattice(IntMatrix{{2}}))) == 1);
  CHECK(signature_mod8(DiscriminantForm(EvenLattice(IntMatrix{{-2}}))) == 7);
  CHECK(signature_mod8(DiscriminantForm(EvenLattice(IntMatrix{{2, 1}, {1, 2}}))) == 2);
}

TEST_CASE("O_K(8) coset table") {
  const DiscriminantForm d(ok_lattice(8));
  CHECK(d.size() == 8);
  CHECK(d.level() == 8);
  CHECK(d.q(d.index_of({Frac(0), Frac(1, 4)})) == Frac(1, 8));
  CHECK(d.q(d.index_of({Frac(0), Frac(1, 2)})) == Frac(1, 2));
  CHECK(d.q(d.index_of({Frac(1, 2), Frac(0)})) == Frac(1, 4));
  CHECK(d.q(d.index_of({Frac(1, 2), Frac(1, 2)})) == Frac(3, 4));
  CHECK(d.q(d.index_of({Frac(1, 2), Frac(1, 4)})) == Frac(3, 8));
  CHECK(d.index_of({Frac(3, 2), Frac(-3, 4)}) == d.index_of({Frac(1, 2), Frac(1, 4)}));
  CHECK_THROWS(d.index_of({Frac(1, 3), Frac(0)}));
  const std::size_t x = d.index_of({Frac(0), Frac(1, 4)});
  CHECK(d.neg_index(x) == d.index_of({Frac(0), Frac(3, 4)}));
  CHECK(d.scale_index(x, 2) == d.index_of({Frac(0), Frac(1, 2)}));
  CHECK(d.add_index(x, d.neg_index(x)) == 0);
  CHECK(d.label(x) == "(0,1/4)");
}

TEST_CASE("Heegner components split into +-pairs") {
  const DiscriminantForm d15(hermitian_lattice(15));
  CHECK(heegner_components(d15, Frac(1, 15)).size() == 2);
  const DiscriminantForm d20(hermitian_lattice(20));
  CHECK(heegner_components(d20, Frac(1, 20)).size() == 2);
  const DiscriminantForm d4(hermitian_lattice(4));
  CHECK(heegner_components(d4, Frac(1, 4)).size() == 2);
  CHECK(heegner_components(d4, Frac(1)).size() == 1);
  for (const auto& p : heegner_components(d15, Frac(1, 15))) {
    CHECK(p.rep <= p.neg);
    CHECK(d15.neg_index(p.rep) == p.neg);
  }
}

TEST_CASE("fundamental discriminants and O_K") {
  for (const auto d : {3, 4, 7, 8, 11, 15, 19, 20, 23, 24}) CHECK(is_fundamental_discriminant(-d));
  for (const auto d : {1, 2, 5, 6, 9, 12, 16}) CHECK_FALSE(is_fundamental_discriminant(-d));
  CHECK(ok_lattice(7).gram() == IntMatrix{{2, 1}, {1, 4}});
  CHECK(ok_lattice(24).gram() == IntMatrix{{2, 0}, {0, 12}});
  CHECK_THROWS(ok_lattice(5));
}

TEST_CASE("enumeration is complete against a double-loop oracle up to norm 10") {
  const std::vector<IntMatrix> grams{{{2, 1}, {1, 4}}, {{2, 0}, {0, 4}}, {{2, 1}, {1, 8}}, {{4, 1}, {1, 6}}, {{2, 1}, {1, 2}}};
  for (const auto& g : grams) {
    const EvenLattice l(g);
    const DiscriminantForm disc(l);
    for (const auto& c : disc.elements()) {
      const auto got = enumerate_vectors(l, c.coords, Frac(10));
      CHECK(got == enumerate_vectors_serial(l, c.coords, Frac(10)));
      std::multiset<std::pair<double, std::pair<double, double>>> mine;
      for (const auto& v : got) {
        CHECK(v.norm <= Frac(10));
        CHECK(v.norm == l.norm(v.coords));
        const double q = oracle::to_double(v.norm);
        mine.insert({oracle::key(q), {oracle::key(oracle::to_double(v.coords[0])), oracle::key(oracle::to_double(v.coords[1]))}});
      }
      const auto naive =
          oracle::enumerate_rank2(g, oracle::to_double(c.coords[0]), oracle::to_double(c.coords[1]), 10.0, 30);
      CHECK(mine == naive);
    }
  }
}

TEST_CASE("enumeration rejects indefinite lattices") {
  CHECK_THROWS(enumerate_vectors(EvenLattice(IntMatrix{{0, 1}, {1, 0}}), {Frac(0), Frac(0)}, Frac(1)));
}

TEST_CASE("discriminant form printout") {
  std::ostringstream os;
  write_discriminant_form(os, DiscriminantForm(ok_lattice(7)));
  CHECK(os.str().find("order 7") != std::string::npos);
  CHECK(os.str().find("level 7") != std::string::npos);
}
