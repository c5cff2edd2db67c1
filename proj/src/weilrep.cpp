#include "vvmf/weilrep.hpp"

#include <algorithm>

#include "vvmf/kernels.hpp"

namespace vvmf {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

void require_same_disc(const VVForm& a, const VVForm& b, const char* what) {
  if (a.disc->lattice().gram() != b.disc->lattice().gram()) {
    throw std::invalid_argument(std::string(what) + ": forms live on different lattices");
  }
}

CycloMatrix conj_transpose(const CyclotomicRing& ring, const CycloMatrix& m) {
  CycloMatrix t{m.dim, std::vector<CycloInt>(m.entries.size())};
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) t.at(j, i) = ring.conj(m.at(i, j));
  }
  return t;
}

CycloMatrix scaled(const CyclotomicRing& ring, const CycloMatrix& m, const CycloInt& c) {
  CycloMatrix out = m;
  for (auto& e : out.entries) e = ring.mul(e, c);
  return out;
}

std::string first_mismatch(const CycloMatrix& a, const CycloMatrix& b) {
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (!(a.at(i, j) == b.at(i, j))) return "differs at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  return "holds";
}

}  // namespace

std::string rep_name(Rep rep) { return rep == Rep::rho ? "rho" : "rho*"; }

Rep parse_rep(const std::string& text) {
  if (text == "rho") return Rep::rho;
  if (text == "rho*" || text == "rho_dual") return Rep::rho_dual;
  throw std::invalid_argument("unknown representation '" + text + "'");
}

VVForm VVForm::zero(DiscPtr disc, Frac weight, Rep rep, Frac prec) {
  VVForm f{std::move(disc), std::move(weight), rep, prec, {}};
  f.components.assign(f.disc->size(), FracSeries(prec));
  return f;
}

void VVForm::add_term(std::size_t x, const Frac& exponent, const Frac& c) {
  components.at(x) = components.at(x) + FracSeries(prec, {{exponent, c}});
}

VVForm serre_derivative(const VVForm& f) {
  VVForm g = f;
  g.weight = f.weight + Frac(2);
  for (auto& c : g.components) c = serre_derivative(c, f.weight);
  return g;
}

bool PrincipalPart::is_integral() const {
  if (!constant.is_integer()) return false;
  return std::all_of(terms.begin(), terms.end(), [](const auto& kv) { return kv.second.is_integer(); });
}

PrincipalPart principal_part(const VVForm& f) {
  if (f.rep != Rep::rho) throw std::invalid_argument("principal_part: expected a form for rho");
  if (f.prec <= Frac(0)) throw PrecisionError("principal_part: constant term unknown below precision " + f.prec.str());
  PrincipalPart p{f.disc, {}, f.coeff(Frac(0), 0)};
  for (std::size_t x = 0; x < f.components.size(); ++x) {
    for (const auto& [e, c] : f.components[x].items()) {
      if (e < Frac(0)) p.terms[{x, e}] = c;
    }
  }
  return p;
}

std::shared_ptr<const CyclotomicRing> weil_ring(const DiscriminantForm& d) {
  return std::make_shared<const CyclotomicRing>(cyclotomic_order(d));
}

WeilMatrix weil_T(const DiscriminantForm& d, std::shared_ptr<const CyclotomicRing> ring) {
  const std::size_t n = d.size();
  CycloMatrix m{n, std::vector<CycloInt>(n * n, ring->zero())};
  for (std::size_t x = 0; x < n; ++x) m.at(x, x) = ring->exp2pii(-d.q(x));
  return WeilMatrix{std::move(ring), std::move(m), 0};
}

WeilMatrix weil_S(const DiscriminantForm& d, int sig, std::shared_ptr<const CyclotomicRing> ring) {
  if (mod_floor(sig, 2) != 0) throw std::invalid_argument("weil_S: odd signature " + std::to_string(sig));
  const std::size_t n = d.size();
  const CycloInt& factor = ring->root(mod_floor(sig / 2, 4) * (ring->order() / 4));  // i^{sig/2}
  CycloMatrix m{n, std::vector<CycloInt>(n * n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) m.at(x, y) = ring->mul(factor, ring->exp2pii(d.pairing(x, y)));
  }
  return WeilMatrix{std::move(ring), std::move(m), 1};
}

Report check_relations(const DiscriminantForm& d, int sig) {
  const auto ring = weil_ring(d);
  const WeilMatrix s = weil_S(d, sig, ring);
  const WeilMatrix t = weil_T(d, ring);
  const auto n = static_cast<std::int64_t>(d.size());
  const CycloMatrix& a = s.matrix;  // rho(S) = a / sqrt|D|

  CycloMatrix n_identity{d.size(), std::vector<CycloInt>(d.size() * d.size(), ring->zero())};
  CycloMatrix negation = n_identity;
  for (std::size_t x = 0; x < d.size(); ++x) {
    n_identity.at(x, x) = ring->from_int(n);
    negation.at(d.neg_index(x), x) = ring->from_int(1);
  }

  Report r;
  r.expect("unitary", "holds", first_mismatch(kernels::matmul(*ring, a, conj_transpose(*ring, a)), n_identity));

  const CycloMatrix a2 = kernels::matmul(*ring, a, a);
  const CycloInt i_sig = ring->root(mod_floor(sig, 4) * (ring->order() / 4));
  r.expect("S^2=i^sig*neg", "holds", first_mismatch(a2, scaled(*ring, negation, ring->mul(i_sig, ring->from_int(n)))));

  const CycloMatrix at = kernels::matmul(*ring, a, t.matrix);
  const CycloMatrix at3 = kernels::matmul(*ring, kernels::matmul(*ring, at, at), at);
  r.expect("(ST)^3=S^2", "holds", first_mismatch(at3, scaled(*ring, a2, ring->sqrt_abs(n))));
  return r;
}

VVForm theta_series(const EvenLattice& lattice, const Frac& prec) {
  auto disc = make_disc(lattice);
  VVForm theta = VVForm::zero(disc, Frac(static_cast<long>(lattice.rank()), 2), Rep::rho_dual, prec);
  for (std::size_t x = 0; x < disc->size(); ++x) {
    std::vector<std::pair<Frac, Frac>> terms;
    for (const auto& v : enumerate_vectors(lattice, disc->element(x).coords, prec)) {
      if (v.norm < prec) terms.emplace_back(v.norm, Frac(1));
    }
    theta.components[x] = FracSeries(prec, terms);
  }
  return theta;
}

Frac pairing_constant_term(const VVForm& f, const VVForm& g) {
  if (f.rep != Rep::rho || g.rep != Rep::rho_dual) {
    throw std::invalid_argument("pairing_constant_term: expected F for rho and G for rho*");
  }
  if (f.weight + g.weight != Frac(2)) throw std::invalid_argument("pairing_constant_term: weights must sum to 2");
  require_same_disc(f, g, "pairing_constant_term");
  Frac total;
  for (std::size_t x = 0; x < f.components.size(); ++x) {
    total += constant_term(f.components[x] * g.components[x]);
  }
  return total;
}

std::pair<Frac, Frac> pairing_constant_term(const AffineVVForm& f, const VVForm& g) {
  return {pairing_constant_term(f.base, g), pairing_constant_term(f.slope, g)};
}

VVForm bb_lift(const FracSeries& f, std::int64_t p, DiscPtr d, const Frac& weight) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("bb_lift: p must be an odd prime");
  if (static_cast<std::int64_t>(d->size()) != p) throw std::invalid_argument("bb_lift: |D| must equal p");
  const Frac pf(static_cast<long>(p));
  VVForm out = VVForm::zero(d, weight, Rep::rho, f.prec() / pf);
  for (const auto& [e, c] : f.items()) {
    if (!e.is_integer()) throw std::invalid_argument("bb_lift: exponent " + e.str() + " is not an integer");
    const std::int64_t n = e.to_int64();
    const Frac ev = e / pf;
    if (n % p == 0) {
      out.add_term(0, ev, c);
      continue;
    }
    const Frac target = (-ev).mod1();
    std::vector<std::size_t> hits;
    for (std::size_t x = 1; x < d->size(); ++x) {
      if (d->q(x) == target) hits.push_back(x);
    }
    if (hits.empty()) {
      throw MinusSpaceError("bb_lift: coefficient of q^" + e.str() + " has no coset with Q = " + target.str() +
                            " (not in the minus space)");
    }
    for (auto x : hits) out.add_term(x, ev, c / Frac(static_cast<long>(hits.size())));
  }
  return out;
}

FracSeries bb_collapse(const VVForm& f, std::int64_t p) {
  const Frac pf(static_cast<long>(p));
  std::vector<std::pair<Frac, Frac>> terms;
  for (const auto& comp : f.components) {
    for (const auto& [e, c] : comp.items()) terms.emplace_back(e * pf, c);
  }
  return FracSeries(f.prec * pf, terms);
}

VVForm theta_contract(const VVForm& f, std::size_t index) {
  if (f.rep != Rep::rho) throw std::invalid_argument("theta_contract: expected a form for rho");
  const IntMatrix& gram = f.disc->lattice().gram();
  const std::size_t n = gram.size();
  if (index >= n || n < 2) throw std::invalid_argument("theta_contract: bad basis index");
  for (std::size_t j = 0; j < n; ++j) {
    if (j != index && gram[index][j] != 0) {
      throw std::invalid_argument("theta_contract: basis vector " + std::to_string(index) +
                                  " is not orthogonal to the rest (non-split lattice)");
    }
  }
  const Frac m(static_cast<long>(gram[index][index]), 2);
  if (m <= Frac(0)) throw std::invalid_argument("theta_contract: contraction vector must have positive norm");

  IntMatrix kgram;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == index) continue;
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != index) row.push_back(gram[i][j]);
    }
    kgram.push_back(std::move(row));
  }
  auto kdisc = make_disc(EvenLattice(std::move(kgram)));

  std::vector<std::vector<FracSeries>> parts(kdisc->size());
  for (std::size_t x = 0; x < f.disc->size(); ++x) {
    const RatVector& coords = f.disc->element(x).coords;
    const Frac a = coords[index];
    RatVector kcoords;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != index) kcoords.push_back(coords[i]);
    }
    const FracSeries& fx = f.components[x];
    const FracSeries theta = unary_theta(m, a, f.prec - fx.lowest() + m);
    parts[kdisc->index_of(kcoords)].push_back(fx * theta);
  }

  Frac prec = f.prec + m;
  std::vector<FracSeries> sums;
  for (auto& list : parts) {
    FracSeries s = list.front();
    for (std::size_t i = 1; i < list.size(); ++i) s = s + list[i];
    prec = std::min(prec, s.prec());
    sums.push_back(std::move(s));
  }
  VVForm out{kdisc, f.weight + Frac(1, 2), Rep::rho, prec, {}};
  for (auto& s : sums) out.components.push_back(truncate(s, prec));
  return out;
}

Report validate(const VVForm& f, Symmetry symmetry) {
  Report r;
  const auto& d = *f.disc;
  r.expect("components", std::to_string(d.size()), std::to_string(f.components.size()));
  if (f.components.size() != d.size()) return r;

  std::string prec = "shared";
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (f.components[x].prec() != f.prec) {
      prec = "component " + d.label(x) + " has prec " + f.components[x].prec().str();
      break;
    }
  }
  r.expect("precision", "shared", prec);

  std::string congruence = "ok";
  for (std::size_t x = 0; x < d.size() && congruence == "ok"; ++x) {
    for (const auto& [e, c] : f.components[x].items()) {
      const Frac shifted = f.rep == Rep::rho ? e + d.q(x) : e - d.q(x);
      if (!shifted.is_integer()) {
        congruence = "q^" + e.str() + " on " + d.label(x) + " (Q=" + d.q(x).str() + ")";
        break;
      }
    }
  }
  r.expect("congruence", "ok", congruence);

  if (symmetry != Symmetry::none) {
    std::string sym = "ok";
    const Frac sign(symmetry == Symmetry::even ? 1 : -1);
    for (std::size_t x = 0; x < d.size() && sym == "ok"; ++x) {
      const FracSeries& mine = f.components[x];
      const FracSeries& other = f.components[d.neg_index(x)];
      if (!(mine == series_scale(other, sign))) sym = "fails on " + d.label(x);
    }
    r.expect(symmetry == Symmetry::even ? "symmetry(even)" : "symmetry(odd)", "ok", sym);
  }
  return r;
}

}  // namespace vvmf
