#pragma once

// Even lattices, discriminant forms and short vectors.
//
// Vectors of L (x) Q are always written in coordinates of the lattice basis,
// so a coset of L'/L is a coordinate vector reduced into [0,1).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vvmf/frac.hpp"

namespace vvmf {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Frac>>;
using RatVector = std::vector<Frac>;

/// Exact determinant and inverse over Q.
Frac determinant(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);

struct SmithForm {
  IntMatrix u, v;                   // unimodular, u * gram * v = diag(divisors)
  std::vector<std::int64_t> divisors;  // d_1 | d_2 | ... , all positive
};
SmithForm smith_normal_form(const IntMatrix& a);

class EvenLattice {
 public:
  /// Validates symmetry, even diagonal and nondegeneracy.
  explicit EvenLattice(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.size(); }
  std::int64_t det() const { return det_; }
  bool is_positive_definite() const;

  /// <x, y> and Q(x) = <x, x>/2 for rational coordinate vectors.
  Frac inner(const RatVector& x, const RatVector& y) const;
  Frac norm(const RatVector& x) const { return inner(x, x) / Frac(2); }

 private:
  IntMatrix gram_;
  std::int64_t det_ = 0;
};

struct Coset {
  RatVector coords;  // each in [0, 1)
  friend bool operator==(const Coset&, const Coset&) = default;
  friend std::strong_ordering operator<=>(const Coset& a, const Coset& b) { return a.coords <=> b.coords; }
};

/// "(0,0,1/2,0,0,0)"
std::string coset_label(const RatVector& coords);

/// L'/L with its quadratic form. Elements are sorted lexicographically by
/// coordinates, so element 0 is always the zero coset.
class DiscriminantForm {
 public:
  explicit DiscriminantForm(const EvenLattice& lattice);

  const EvenLattice& lattice() const { return lattice_; }
  const RatMatrix& gram_inverse() const { return gram_inv_; }
  /// Nontrivial elementary divisors (orders of the Smith generators).
  const std::vector<std::int64_t>& orders() const { return orders_; }
  const std::vector<RatVector>& generators() const { return generators_; }

  std::size_t size() const { return elements_.size(); }
  const Coset& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Coset>& elements() const { return elements_; }
  /// Smallest N with N Q(x) integral for every x.
  std::int64_t level() const { return level_; }

  /// Index of the coset of `coords` (any representative in L'); throws if
  /// the vector is not in L'.
  std::size_t index_of(const RatVector& coords) const;
  bool contains(const RatVector& coords) const;

  /// Q(x) mod 1 in [0, 1).
  const Frac& q(std::size_t i) const { return qvals_[i]; }
  /// <x, y> mod 1 in [0, 1).
  Frac pairing(std::size_t i, std::size_t j) const;
  std::size_t neg_index(std::size_t i) const { return neg_[i]; }
  std::size_t add_index(std::size_t i, std::size_t j) const;
  std::size_t scale_index(std::size_t i, std::int64_t k) const;
  std::string label(std::size_t i) const { return coset_label(elements_[i].coords); }

 private:
  EvenLattice lattice_;
  RatMatrix gram_inv_;
  std::vector<std::int64_t> orders_;
  std::vector<RatVector> generators_;
  std::vector<Coset> elements_;
  std::vector<Frac> qvals_;
  std::vector<std::size_t> neg_;
  std::int64_t level_ = 1;
};

/// Signature mod 8 from the Milgram formula, evaluated exactly in Z[zeta_M].
/// Throws if |D| exceeds max_order or the Gauss sum has the wrong absolute value.
int signature_mod8(const DiscriminantForm& d, std::size_t max_order = 5000);
/// lcm(8, level, odd primes of |D|): every e(Q(x)), e(<x,y>) and sqrt|D| lives in Z[zeta_M].
std::int64_t cyclotomic_order(const DiscriminantForm& d);

bool is_fundamental_discriminant(std::int64_t disc);
/// O_K with its norm form, K = Q(sqrt(-d)).
EvenLattice ok_lattice(std::int64_t d);
/// U + U + O_K, with the U pairs on basis indices (0,5) and (1,4).
EvenLattice hermitian_lattice(std::int64_t d);
/// The discriminants studied here: 4, 7, 8, 11, 15, 19, 20, 24.
const std::vector<std::int64_t>& standard_discriminants();

struct LatticeVector {
  RatVector coords;
  Frac norm;  // Q
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

/// Every lambda in L + gamma with Q(lambda) <= max_norm, ordered by (norm, coords).
std::vector<LatticeVector> enumerate_vectors(const EvenLattice& lattice, const RatVector& gamma, const Frac& max_norm);
std::vector<LatticeVector> enumerate_vectors_serial(const EvenLattice& lattice, const RatVector& gamma,
                                                    const Frac& max_norm);

struct CosetPair {
  std::size_t rep;  // lexicographically smaller of x, -x
  std::size_t neg;
};
/// The +-pairs of cosets with Q(x) = m mod 1.
std::vector<CosetPair> heegner_components(const DiscriminantForm& d, const Frac& m);

void write_matrix(std::ostream& os, const IntMatrix& m);
/// Orders, then one "coset Q order" line per element.
void write_discriminant_form(std::ostream& os, const DiscriminantForm& d);

}  // namespace vvmf
