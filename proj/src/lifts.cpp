#include "vvmf/lifts.hpp"

#include <algorithm>
#include <set>

namespace vvmf {

std::vector<HeegnerEntry> HeegnerDivisor::at(const Frac& m) const {
  std::vector<HeegnerEntry> out;
  for (const auto& e : entries) {
    if (e.m == m) out.push_back(e);
  }
  return out;
}

std::string HeegnerDivisor::str() const {
  if (entries.empty()) return "0";
  std::string s;
  for (const auto& e : entries) {
    if (!s.empty()) s += " + ";
    s += e.multiplicity.str() + "*H(" + e.m.str() + "," + disc->label(e.component.rep) + ")";
  }
  return s;
}

Frac borcherds_weight(const PrincipalPart& p) { return p.constant / Frac(2); }

Frac singular_extent(const PrincipalPart& p) {
  Frac ext;
  for (const auto& [key, c] : p.terms) {
    if (!c.is_zero()) ext = std::max(ext, -key.second);
  }
  return ext;
}

HeegnerDivisor borcherds_divisor(const PrincipalPart& p, const Frac& max_m) {
  if (!p.is_integral()) throw std::domain_error("borcherds_divisor: principal part has non-integral coefficients");
  const DiscriminantForm& d = *p.disc;
  const Frac ext = singular_extent(p);
  auto coeff = [&](std::size_t x, const Frac& e) {
    const auto it = p.terms.find({x, e});
    return it == p.terms.end() ? Frac(0) : it->second;
  };

  HeegnerDivisor div{p.disc, {}};
  const Frac step(1, static_cast<long>(d.level()));
  for (Frac m = step; m <= max_m; m += step) {
    for (const auto& pair : heegner_components(d, m)) {
      Frac mult;
      for (std::int64_t j = 1; Frac(static_cast<long>(j * j)) * m <= ext; ++j) {
        mult += coeff(d.scale_index(pair.rep, j), -Frac(static_cast<long>(j * j)) * m);
      }
      if (!mult.is_zero()) div.entries.push_back(HeegnerEntry{m, pair, mult});
    }
  }
  return div;
}

LiftMeta borcherds_meta(const PrincipalPart& p) {
  return LiftMeta{LiftKind::product, borcherds_weight(p), 0, borcherds_divisor(p, singular_extent(p))};
}

LiftMeta additive_lift_meta(const VVForm& f, std::int64_t n) {
  if (f.rep != Rep::rho) throw std::invalid_argument("additive_lift_meta: expected a form for rho");
  if (f.prec <= Frac(0)) throw PrecisionError("additive_lift_meta: principal part not known (prec <= 0)");
  const Frac k = f.weight - Frac(1) + Frac(static_cast<long>(n), 2);
  if (!k.is_integer() || k < Frac(1)) {
    throw std::invalid_argument("additive_lift_meta: weight " + k.str() + " of the lift is not a positive integer");
  }
  const DiscriminantForm& d = *f.disc;
  std::set<std::pair<Frac, std::size_t>> poles;
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (const auto& [e, c] : f.components[x].items()) {
      if (e < Frac(0)) poles.insert({-e, std::min(x, d.neg_index(x))});
    }
  }
  LiftMeta meta{LiftKind::additive, k, k.to_int64(), HeegnerDivisor{f.disc, {}}};
  for (const auto& [m, rep] : poles) {
    meta.divisor.entries.push_back(HeegnerEntry{m, CosetPair{rep, d.neg_index(rep)}, k});
  }
  return meta;
}

Frac jacobian_weight(const std::vector<Frac>& weights, std::int64_t n) {
  Frac total(static_cast<long>(n));
  for (const auto& w : weights) total += w;
  return total;
}

Frac minimal_jacobian_weight() { return jacobian_weight({1, 2, 2, 2, 2}, 4); }

ClassifyResult classify_siegel(std::int64_t d) {
  const EvenLattice ok = ok_lattice(d);
  std::size_t units = 0;
  for (const auto& v : enumerate_vectors(ok, {Frac(0), Frac(0)}, Frac(1))) {
    if (v.norm == Frac(1)) ++units;
  }
  if (units != 2) {
    throw std::invalid_argument("classify_siegel: O_K has " + std::to_string(units) + " units, need exactly 2 (d > 4)");
  }

  const VVForm theta = theta_series(ok, Frac(2));
  const VVForm g = serre_derivative(theta);
  const DiscPtr disc = theta.disc;
  const Frac inv_d(1, static_cast<long>(d));

  std::vector<CosetPair> pairs;
  for (const auto& pair : heegner_components(*disc, inv_d)) {
    if (!theta.coeff(inv_d, pair.rep).is_zero()) pairs.push_back(pair);
  }
  if (pairs.size() != 1) throw std::logic_error("classify_siegel: expected a unique pair of norm 1/d cosets");
  const CosetPair v = pairs.front();

  AffineVVForm f{VVForm::zero(disc, Frac(-1), Rep::rho, inv_d), VVForm::zero(disc, Frac(-1), Rep::rho, inv_d)};
  f.base.add_term(0, Frac(-1), Frac(1));
  f.base.add_term(0, Frac(0), Frac(70));
  f.slope.add_term(v.rep, -inv_d, Frac(1));
  f.slope.add_term(v.neg, -inv_d, Frac(1));
  f.slope.add_term(0, Frac(0), Frac(-2));

  const auto [base, slope] = pairing_constant_term(f, g);
  if (slope.is_zero()) throw std::logic_error("classify_siegel: pairing does not depend on m");
  ClassifyResult r{d, -base / slope, Frac(), false, base, slope};
  r.wt_j = Frac(35) - r.m;
  r.feasible = r.wt_j >= minimal_jacobian_weight();
  return r;
}

Report verify_table1(const std::vector<Table1Row>& rows) {
  Report r;
  for (const auto& row : rows) {
    r.expect("d" + std::to_string(row.d), jacobian_weight(row.generator_weights, 4).str(),
             borcherds_weight(row.product).str());
  }
  return r;
}

}  // namespace vvmf
