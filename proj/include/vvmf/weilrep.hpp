#pragma once

// Vector-valued q-expansions and the Weil representation.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vvmf/cyclotomic.hpp"
#include "vvmf/lattice.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/report.hpp"

namespace vvmf {

using DiscPtr = std::shared_ptr<const DiscriminantForm>;

inline DiscPtr make_disc(const EvenLattice& lattice) { return std::make_shared<const DiscriminantForm>(lattice); }

/// rho: exponents of component x lie in Z - Q(x); rho_dual: in Z + Q(x).
enum class Rep { rho, rho_dual };
std::string rep_name(Rep rep);
Rep parse_rep(const std::string& text);

/// F = sum_x f_x e_x. Components are indexed like disc->elements() and all
/// share the precision `prec`.
struct VVForm {
  DiscPtr disc;
  Frac weight;
  Rep rep = Rep::rho;
  Frac prec;
  std::vector<FracSeries> components;

  static VVForm zero(DiscPtr disc, Frac weight, Rep rep, Frac prec);
  /// Coefficient c(exponent, x); throws PrecisionError beyond prec.
  Frac coeff(const Frac& exponent, std::size_t x) const { return components.at(x).coeff(exponent); }
  /// Adds c q^exponent to component x.
  void add_term(std::size_t x, const Frac& exponent, const Frac& c);
};

/// Componentwise q d/dq - (k/12) E_2; weight k -> k + 2.
VVForm serre_derivative(const VVForm& f);

/// Negative-exponent coefficients plus c(0, 0).
struct PrincipalPart {
  DiscPtr disc;
  std::map<std::pair<std::size_t, Frac>, Frac> terms;  // (coset, exponent < 0) -> c
  Frac constant;

  bool is_integral() const;
};
/// Requires rep rho and prec > 0 (otherwise c(0,0) is unknown).
PrincipalPart principal_part(const VVForm& f);

/// Square matrix over Z[zeta_M] times |D|^{-scale/2}.
struct WeilMatrix {
  std::shared_ptr<const CyclotomicRing> ring;
  CycloMatrix matrix;
  int scale = 0;
};

std::shared_ptr<const CyclotomicRing> weil_ring(const DiscriminantForm& d);
/// rho(T) e_x = e(-Q(x)) e_x.
WeilMatrix weil_T(const DiscriminantForm& d, std::shared_ptr<const CyclotomicRing> ring);
/// rho(S) e_x = i^{sig/2} |D|^{-1/2} sum_y e(<x,y>) e_y; odd sig is rejected.
WeilMatrix weil_S(const DiscriminantForm& d, int sig, std::shared_ptr<const CyclotomicRing> ring);
/// Unitarity of rho(S), rho(S)^2 = i^sig (x -> -x), (rho(S) rho(T))^3 = rho(S)^2, all exact.
Report check_relations(const DiscriminantForm& d, int sig);

/// sum over lambda in L' of q^{Q(lambda)} e_lambda; weight rank/2, rep rho_dual.
VVForm theta_series(const EvenLattice& lattice, const Frac& prec);

/// Constant term of sum_x f_x g_x for F (rho, weight k) and G (rho_dual, weight 2 - k).
Frac pairing_constant_term(const VVForm& f, const VVForm& g);

/// base + m * slope for one rational unknown m.
struct AffineVVForm {
  VVForm base;
  VVForm slope;
};
/// (constant term of <base, G>, constant term of <slope, G>).
std::pair<Frac, Frac> pairing_constant_term(const AffineVVForm& f, const VVForm& g);

/// A scalar series that does not come from the minus space.
class MinusSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scalar level-p form to vector-valued form on D with |D| = p prime:
/// c(n/p, 0) = a(n) when p | n, otherwise a(n)/2 on each of +-x with Q(x) = -n/p mod 1.
VVForm bb_lift(const FracSeries& f, std::int64_t p, DiscPtr d, const Frac& weight);
/// Inverse of bb_lift: sum the components back into one scalar series.
FracSeries bb_collapse(const VVForm& f, std::int64_t p);

/// Contraction along basis vector `index` of norm m > 0, which must be
/// orthogonal to every other basis vector. Components are multiplied by
/// unary theta series in m and summed onto the complement; weight + 1/2.
VVForm theta_contract(const VVForm& f, std::size_t index);

enum class Symmetry { none, even, odd };
/// Exponent congruence, shared precision and (optionally) c(m,x) = +-c(m,-x).
Report validate(const VVForm& f, Symmetry symmetry = Symmetry::none);

}  // namespace vvmf
