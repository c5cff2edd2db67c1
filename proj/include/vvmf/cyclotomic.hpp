#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vvmf/frac.hpp"

namespace vvmf {

/// Element of Z[zeta_M] stored as coefficients in the power basis
/// 1, zeta, ..., zeta^{phi(M)-1}, already reduced modulo Phi_M.
struct CycloInt {
  std::vector<std::int64_t> coeffs;

  bool is_zero() const;
  friend bool operator==(const CycloInt&, const CycloInt&) = default;
  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator-(CycloInt a);
  CycloInt scaled(std::int64_t k) const;
};

/// The ring Z[zeta_M]. Elements are plain coefficient vectors; everything
/// that needs the modulus (products, conjugation, roots of unity) goes
/// through the ring.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(std::int64_t order);

  std::int64_t order() const { return order_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  /// Phi_M, coefficients from x^0 up to the leading 1.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  CycloInt zero() const;
  CycloInt from_int(std::int64_t k) const;
  /// zeta_M^j for any integer j.
  const CycloInt& root(std::int64_t j) const;
  /// e(r) = exp(2 pi i r); requires r*M to be an integer.
  const CycloInt& exp2pii(const Frac& r) const;

  CycloInt mul(const CycloInt& a, const CycloInt& b) const;
  /// Complex conjugation zeta -> zeta^{-1}.
  CycloInt conj(const CycloInt& a) const;

  /// The positive real square root of n > 0 as an element of this ring.
  /// Built from quadratic Gauss sums; throws if some odd prime p | n (with
  /// odd multiplicity) does not divide M, or if 2 appears and 8 does not divide M.
  CycloInt sqrt_abs(std::int64_t n) const;

 private:
  CycloInt reduce(std::vector<std::int64_t> poly) const;

  std::int64_t order_;
  std::vector<std::int64_t> modulus_;
  std::vector<CycloInt> roots_;
};

/// Integer coefficients of the n-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

/// Dense square matrix over Z[zeta_M], row-major.
struct CycloMatrix {
  std::size_t dim = 0;
  std::vector<CycloInt> entries;

  CycloInt& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
  const CycloInt& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
  friend bool operator==(const CycloMatrix&, const CycloMatrix&) = default;
};

}  // namespace vvmf
