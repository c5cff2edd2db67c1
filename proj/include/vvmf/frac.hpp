#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vvmf {

/// Exact rational number, always in lowest terms with a positive denominator.
class Frac {
 public:
  Frac() = default;
  Frac(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Frac(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Frac(long long value) : v_(mpz_class(std::to_string(value))) {}  // NOLINT
  Frac(long num, long den);
  explicit Frac(const mpz_class& value) : v_(value) {}
  explicit Frac(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Frac parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Floor as an integer; throws if it does not fit.
  std::int64_t floor() const;
  std::int64_t ceil() const;
  /// Value as int64; throws if not an integer or out of range.
  std::int64_t to_int64() const;
  /// Representative in [0, 1).
  Frac mod1() const;

  std::string str() const { return v_.get_str(); }

  Frac& operator+=(const Frac& o) { v_ += o.v_; return *this; }
  Frac& operator-=(const Frac& o) { v_ -= o.v_; return *this; }
  Frac& operator*=(const Frac& o) { v_ *= o.v_; return *this; }
  Frac& operator/=(const Frac& o);

  friend Frac operator+(Frac a, const Frac& b) { return a += b; }
  friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
  friend Frac operator*(Frac a, const Frac& b) { return a *= b; }
  friend Frac operator/(Frac a, const Frac& b) { return a /= b; }
  friend Frac operator-(const Frac& a) { return Frac(mpq_class(-a.v_)); }

  friend bool operator==(const Frac& a, const Frac& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Frac& f);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Floor division for signed integers.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);
/// Largest r with r*r <= n (n >= 0).
std::int64_t isqrt(std::int64_t n);

}  // namespace vvmf
