#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vvmf/cases.hpp"
#include "vvmf/weilrep.hpp"

using namespace vvmf;

namespace {

oracle::CMatrix to_complex(const WeilMatrix& w, std::size_t n) {
  const double scale = std::pow(static_cast<double>(n), -w.scale / 2.0);
  oracle::CMatrix m(w.matrix.dim, std::vector<oracle::cplx>(w.matrix.dim));
  for (std::size_t i = 0; i < w.matrix.dim; ++i) {
    for (std::size_t j = 0; j < w.matrix.dim; ++j) m[i][j] = scale * oracle::eval(w.matrix.at(i, j), w.ring->order());
  }
  return m;
}

VVForm d7_phi7_input(DiscPtr disc) {
  const FracSeries f(Frac(6), {{Frac(-2), Frac(2)}, {Frac(-1), Frac(6)}, {Frac(0), Frac(14)}, {Frac(3), Frac(-38)}, {Frac(5), Frac(-96)}});
  return bb_lift(f, 7, std::move(disc), Frac(-1));
}

}  // namespace

TEST_CASE("exact Weil relations hold for every Hermitian lattice") {
  for (const auto d : standard_discriminants()) {
    CAPTURE(d);
    const DiscriminantForm disc(hermitian_lattice(d));
    const Report r = check_relations(disc, 2);
    CHECK(r.ok());
    CHECK(r.checks().size() == 3);
  }
  const DiscriminantForm u(EvenLattice(IntMatrix{{0, 1}, {1, 0}}));
  CHECK(check_relations(u, 0).ok());
}

TEST_CASE("a wrong signature breaks the relations") {
  const DiscriminantForm disc(hermitian_lattice(7));
  CHECK_FALSE(check_relations(disc, 6).ok());
}

TEST_CASE("odd signature is rejected") {
  const DiscriminantForm a1(EvenLattice(IntMatrix{{2}}));
  CHECK_THROWS_AS(weil_S(a1, 1, weil_ring(a1)), std::invalid_argument);
}

TEST_CASE("exact S and T agree with a floating-point evaluation of the defining formula") {
  for (const std::int64_t d : {4, 7, 8, 15}) {
    CAPTURE(d);
    const EvenLattice l = hermitian_lattice(d);
    const DiscriminantForm disc(l);
    const auto ring = weil_ring(disc);
    const auto s = to_complex(weil_S(disc, 2, ring), disc.size());
    const auto t = to_complex(weil_T(disc, ring), disc.size());
    const auto s_ref = oracle::weil_s(l.gram(), disc.elements(), 2);
    const auto t_ref = oracle::weil_t(l.gram(), disc.elements());
    CHECK(oracle::distance(s, s_ref) < 1e-9);
    CHECK(oracle::distance(t, t_ref) < 1e-9);
    const auto st = oracle::mul(s_ref, t_ref);
    CHECK(oracle::distance(oracle::mul(oracle::mul(st, st), st), oracle::mul(s_ref, s_ref)) < 1e-9);
  }
}

TEST_CASE("theta series of O_K counts lattice vectors") {
  const EvenLattice ok = ok_lattice(7);
  const VVForm theta = theta_series(ok, Frac(4));
  CHECK(theta.weight == Frac(1));
  CHECK(theta.rep == Rep::rho_dual);
  CHECK(theta.coeff(Frac(0), 0) == Frac(1));
  for (std::size_t x = 0; x < theta.disc->size(); ++x) {
    const auto vecs = enumerate_vectors(ok, theta.disc->element(x).coords, Frac(3));
    std::map<Frac, long> count;
    for (const auto& v : vecs) ++count[v.norm];
    for (const auto& [n, c] : count) CHECK(theta.coeff(n, x) == Frac(c));
  }
  CHECK(theta.coeff(Frac(1), 0) == Frac(2));
  CHECK(theta.coeff(Frac(2), 0) == Frac(4));
}

TEST_CASE("Serre derivative of theta") {
  const VVForm g = serre_derivative(theta_series(ok_lattice(11), Frac(2)));
  CHECK(g.weight == Frac(3));
  CHECK(g.coeff(Frac(0), 0) == Frac(-1, 12));
  CHECK(g.coeff(Frac(1), 0) == Frac(23, 6));
}

TEST_CASE("principal part needs rho and positive precision") {
  const DiscPtr disc = make_disc(hermitian_lattice(7));
  VVForm f = VVForm::zero(disc, Frac(-1), Rep::rho, Frac(0));
  CHECK_THROWS_AS(principal_part(f), PrecisionError);
  f = VVForm::zero(disc, Frac(-1), Rep::rho_dual, Frac(1));
  CHECK_THROWS(principal_part(f));
  const PrincipalPart p = principal_part(d7_phi7_input(disc));
  CHECK(p.constant == Frac(14));
  CHECK(p.is_integral());
}

TEST_CASE("pairing constant term vanishes for the discriminant -7 input") {
  const EvenLattice ok = ok_lattice(7);
  const VVForm f = d7_phi7_input(make_disc(ok));
  const VVForm g = serre_derivative(theta_series(ok, Frac(3)));
  CHECK(pairing_constant_term(f, g) == Frac(0));
  CHECK_THROWS(pairing_constant_term(f, theta_series(ok, Frac(3))));
  CHECK_THROWS(pairing_constant_term(g, f));
}

TEST_CASE("BB lift puts coefficients on the right cosets") {
  const DiscPtr disc = make_disc(hermitian_lattice(7));
  const VVForm f = d7_phi7_input(disc);
  CHECK(f.prec == Frac(6, 7));
  CHECK(f.coeff(Frac(0), 0) == Frac(14));
  const auto h = heegner_components(*disc, Frac(1, 7));
  REQUIRE(h.size() == 1);
  CHECK(f.coeff(Frac(-1, 7), h[0].rep) == Frac(3));
  CHECK(f.coeff(Frac(-1, 7), h[0].neg) == Frac(3));
  CHECK(validate(f, Symmetry::even).ok());
}

TEST_CASE("BB lift rejects series outside the minus space") {
  const DiscPtr disc = make_disc(hermitian_lattice(7));
  // -1/7 mod 1 = 6/7 is not a norm of D: exponents n with Q = -n/7 need -n to be a square mod 7.
  const FracSeries bad(Frac(2), {{Frac(1), Frac(1)}});
  CHECK_THROWS_AS(bb_lift(bad, 7, disc, Frac(-1)), MinusSpaceError);
  CHECK_THROWS(bb_lift(bad, 5, disc, Frac(-1)));
}

TEST_CASE("BB round trip on random minus-space series") {
  std::mt19937_64 rng(7);
  for (const std::int64_t p : {7, 11, 19}) {
    const DiscPtr disc = make_disc(hermitian_lattice(p));
    std::set<std::int64_t> allowed;  // n with a coset of Q = -n/p
    for (std::size_t x = 0; x < disc->size(); ++x) allowed.insert((disc->q(x) * Frac(static_cast<long>(p))).to_int64());
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::pair<Frac, Frac>> terms;
      for (std::int64_t n = -2 * p; n < 3 * p; ++n) {
        const std::int64_t r = mod_floor(-n, p);
        if (!allowed.count(r) || rng() % 3 == 0) continue;
        terms.emplace_back(Frac(static_cast<long>(n)), Frac(static_cast<long>(rng() % 19) - 9));
      }
      const FracSeries f(Frac(static_cast<long>(3 * p)), terms);
      const VVForm lifted = bb_lift(f, p, disc, Frac(-1));
      CHECK(bb_collapse(lifted, p) == f);
      CHECK(validate(lifted, Symmetry::even).ok());
    }
  }
}

TEST_CASE("BB collapse then lift is the identity on even forms") {
  const DiscPtr disc = make_disc(hermitian_lattice(11));
  VVForm f = VVForm::zero(disc, Frac(-1), Rep::rho, Frac(2));
  for (const auto& pair : heegner_components(*disc, Frac(3, 11))) {
    f.add_term(pair.rep, Frac(-3, 11), Frac(5));
    f.add_term(pair.neg, Frac(-3, 11), Frac(5));
    f.add_term(pair.rep, Frac(8, 11), Frac(-2));
    f.add_term(pair.neg, Frac(8, 11), Frac(-2));
  }
  f.add_term(0, Frac(0), Frac(6));
  f.add_term(0, Frac(1), Frac(1));
  const VVForm again = bb_lift(bb_collapse(f, 11), 11, disc, Frac(-1));
  CHECK(again.prec == f.prec);
  CHECK(again.components == f.components);
}

TEST_CASE("theta contraction of the discriminant -8 product input") {
  const DiscPtr disc = make_disc(ok_lattice(8));
  VVForm f = VVForm::zero(disc, Frac(-1), Rep::rho, Frac(1, 4));
  f.add_term(0, Frac(-1), Frac(1));
  f.add_term(0, Frac(0), Frac(54));
  f.add_term(disc->index_of({Frac(0), Frac(1, 4)}), Frac(-1, 8), Frac(8));
  f.add_term(disc->index_of({Frac(0), Frac(3, 4)}), Frac(-1, 8), Frac(8));
  const VVForm c = theta_contract(f, 1);
  CHECK(c.weight == Frac(-1, 2));
  CHECK(c.disc->size() == 2);
  // By hand: q^-1 * theta_0 + 54 + 2 * 8 q^-1/8 * (q^{1/8} + ...) = q^-1 + 70 + O(q).
  CHECK(c.coeff(Frac(-1), 0) == Frac(1));
  CHECK(c.coeff(Frac(0), 0) == Frac(70));
  CHECK(c.prec > Frac(0));
  CHECK_THROWS(theta_contract(f, 2));
  CHECK_THROWS(theta_contract(VVForm::zero(make_disc(ok_lattice(7)), Frac(0), Rep::rho, Frac(1)), 1));
}

TEST_CASE("validate finds congruence and symmetry violations") {
  const DiscPtr disc = make_disc(hermitian_lattice(20));
  VVForm f = VVForm::zero(disc, Frac(-1), Rep::rho, Frac(1, 4));
  const std::size_t x = disc->index_of({Frac(0), Frac(0), Frac(0), Frac(1, 5), Frac(0), Frac(0)});
  f.add_term(x, Frac(-1, 5), Frac(1));
  CHECK(validate(f, Symmetry::none).ok());
  CHECK_FALSE(validate(f, Symmetry::even).ok());
  f.add_term(disc->neg_index(x), Frac(-1, 5), Frac(1));
  CHECK(validate(f, Symmetry::even).ok());
  CHECK_FALSE(validate(f, Symmetry::odd).ok());
  // A q^{1/5} term on a coset of norm 1/5 is not admissible for rho.
  f.add_term(x, Frac(1, 5), Frac(1));
  CHECK_FALSE(validate(f).ok());
}
