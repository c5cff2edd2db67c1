#pragma once

// Weights, divisors and pole orders of Borcherds products and singular
// additive lifts, plus the Jacobian weight bookkeeping.

#include <string>
#include <vector>

#include "vvmf/weilrep.hpp"

namespace vvmf {

struct HeegnerEntry {
  Frac m;
  CosetPair component;
  Frac multiplicity;
};

/// Sum of multiplicity * H(m, +-gamma), ordered by (m, component).
struct HeegnerDivisor {
  DiscPtr disc;
  std::vector<HeegnerEntry> entries;

  /// All entries with discriminant m.
  std::vector<HeegnerEntry> at(const Frac& m) const;
  /// "3*H(1/7,(0,0,1/7,5/7,0,0)) + 1*H(2/7,...)"
  std::string str() const;
};

enum class LiftKind { product, additive };

/// For products `divisor` is the divisor; for additive lifts it lists the
/// pole components, each with multiplicity pole_order.
struct LiftMeta {
  LiftKind kind;
  Frac weight;
  std::int64_t pole_order = 0;
  HeegnerDivisor divisor;
};

/// c(0,0)/2.
Frac borcherds_weight(const PrincipalPart& p);
/// mult(m, +-gamma) = sum_{j>=1} c(-j^2 m, j gamma) for 0 < m <= max_m; zero
/// multiplicities are omitted.
HeegnerDivisor borcherds_divisor(const PrincipalPart& p, const Frac& max_m);
/// Largest |exponent| among the singular terms (0 if there are none).
Frac singular_extent(const PrincipalPart& p);
LiftMeta borcherds_meta(const PrincipalPart& p);

/// k = weight - 1 + n/2 for a form on a lattice of signature (n, 2).
LiftMeta additive_lift_meta(const VVForm& f, std::int64_t n);

/// n + sum of weights.
Frac jacobian_weight(const std::vector<Frac>& weights, std::int64_t n);

struct ClassifyResult {
  std::int64_t d;
  Frac m;
  Frac wt_j;
  bool feasible;
  Frac base_pairing;   // <q^-1 e_0 + 70 e_0, G>
  Frac slope_pairing;  // <q^{-1/d}(e_v + e_{-v}) - 2 e_0, G>
};

/// Solves <F, G> = 0 for the multiplicity m, where G is the Serre derivative
/// of the theta series of O_K and F = q^-1 e_0 + m q^{-1/d}(e_v + e_{-v}) + 2 (35 - m) e_0.
ClassifyResult classify_siegel(std::int64_t d);
/// sum over jacobian weights of a minimal generating set: 1 + 2 + 2 + 2 + 2 + 4.
Frac minimal_jacobian_weight();

struct Table1Row {
  std::int64_t d;
  std::vector<Frac> generator_weights;
  PrincipalPart product;  // the skew-symmetric product
};
Report verify_table1(const std::vector<Table1Row>& rows);

}  // namespace vvmf
