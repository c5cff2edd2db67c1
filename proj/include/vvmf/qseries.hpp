#pragma once

// Exact q-expansions with exponents in (1/N)Z.
//
// A FracSeries knows its coefficients strictly below `prec`; anything at or
// above `prec` is unknown, not zero. Every operation propagates precision
// conservatively and never extends it.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vvmf/frac.hpp"

namespace vvmf {

/// Thrown when a requested coefficient lies at or above the known precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FracSeries {
 public:
  using Terms = std::map<std::int64_t, Frac>;

  /// The zero series known below `prec`.
  explicit FracSeries(Frac prec);
  /// Terms given as (exponent, coefficient); zero coefficients are dropped and
  /// repeated exponents are summed. Every exponent must be < prec.
  FracSeries(Frac prec, const std::vector<std::pair<Frac, Frac>>& terms);
  /// Raw form: exponents are numerators over `denom`.
  FracSeries(std::int64_t denom, std::int64_t prec_num, Terms terms);

  std::int64_t denom() const { return denom_; }
  Frac prec() const { return Frac(static_cast<long>(prec_num_), static_cast<long>(denom_)); }
  std::int64_t prec_num() const { return prec_num_; }
  const Terms& raw_terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Smallest exponent with a nonzero coefficient, or prec for the zero series.
  Frac lowest() const;
  std::int64_t lowest_num() const { return terms_.empty() ? prec_num_ : terms_.begin()->first; }

  /// Coefficient at `exponent`; throws PrecisionError if exponent >= prec.
  Frac coeff(const Frac& exponent) const;
  /// (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<Frac, Frac>> items() const;

  /// Same series over the finer denominator `denom` (a multiple of denom()).
  FracSeries with_denom(std::int64_t denom) const;

  /// Value equality: same precision and same coefficients, regardless of denom().
  friend bool operator==(const FracSeries& a, const FracSeries& b);

 private:
  void check_invariants() const;

  std::int64_t denom_ = 1;
  std::int64_t prec_num_ = 0;
  Terms terms_;
};

// --- arithmetic -----------------------------------------------------------

FracSeries series_add(const FracSeries& a, const FracSeries& b);
FracSeries series_sub(const FracSeries& a, const FracSeries& b);
FracSeries series_neg(const FracSeries& a);
FracSeries series_scale(const FracSeries& a, const Frac& c);
/// Exact product; prec = min(a.prec + lo(b), b.prec + lo(a)).
FracSeries series_mul(const FracSeries& a, const FracSeries& b);
/// Same contract as series_mul, computed by the serial reference kernel.
FracSeries series_mul_serial(const FracSeries& a, const FracSeries& b);
/// Multiplicative inverse; requires a nonzero leading coefficient.
FracSeries series_inverse(const FracSeries& a);
/// a^k for any integer k (negative powers via series_inverse).
FracSeries series_pow(const FracSeries& a, std::int64_t k);
/// Multiply by q^e.
FracSeries series_shift(const FracSeries& a, const Frac& e);
/// Drop everything at or above `prec` (which must not exceed a.prec()).
FracSeries truncate(const FracSeries& a, const Frac& prec);
/// True if a and b agree below min(a.prec, b.prec).
bool agree(const FracSeries& a, const FracSeries& b);

inline FracSeries operator+(const FracSeries& a, const FracSeries& b) { return series_add(a, b); }
inline FracSeries operator-(const FracSeries& a, const FracSeries& b) { return series_sub(a, b); }
inline FracSeries operator-(const FracSeries& a) { return series_neg(a); }
inline FracSeries operator*(const FracSeries& a, const FracSeries& b) { return series_mul(a, b); }
inline FracSeries operator*(const Frac& c, const FracSeries& a) { return series_scale(a, c); }

// --- special series ---------------------------------------------------------

struct EtaFactor {
  std::int64_t multiplier;  // m >= 1, the factor is eta(m tau)
  std::int64_t power;       // r
};

/// prod eta(m tau)^r known below `prec`; leading exponent sum(m r)/24.
FracSeries eta_quotient(const std::vector<EtaFactor>& factors, const Frac& prec);
/// prod_{n>=1} (1 - q^n), via the pentagonal number theorem, known below prec.
FracSeries euler_product(const Frac& prec);
/// E_2 = 1 - 24 sum sigma_1(n) q^n known below prec (prec >= 1).
FracSeries eisenstein2(const Frac& prec);
/// sum over n in Z of q^{m (n + a)^2}, known below prec.
FracSeries unary_theta(const Frac& m, const Frac& a, const Frac& prec);

/// q d/dq.
FracSeries q_derivative(const FracSeries& f);
/// q d/dq f - (w/12) E_2 f, with E_2 expanded far enough not to limit precision.
FracSeries serre_derivative(const FracSeries& f, const Frac& weight);
/// Coefficient of q^0; throws PrecisionError if prec <= 0.
Frac constant_term(const FracSeries& f);

// --- text form --------------------------------------------------------------

/// "prec p/q" followed by one "exponent coefficient" line per term.
void write_series(std::ostream& os, const FracSeries& f);
FracSeries read_series(std::istream& is);

}  // namespace vvmf
