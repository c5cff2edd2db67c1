#include "vvmf/frac.hpp"

#include <limits>
#include <ostream>

namespace vvmf {

Frac::Frac(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Frac: zero denominator");
  v_.canonicalize();
}

Frac Frac::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Frac::parse: empty string");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Frac::parse: malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Frac::parse: zero denominator");
  q.canonicalize();
  return Frac(std::move(q));
}

Frac& Frac::operator/=(const Frac& o) {
  if (o.is_zero()) throw std::domain_error("Frac: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {
std::int64_t checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("Frac: integer out of int64 range");
  return z.get_si();
}
}  // namespace

std::int64_t Frac::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return checked(q);
}

std::int64_t Frac::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return checked(q);
}

std::int64_t Frac::to_int64() const {
  if (!is_integer()) throw std::domain_error("Frac: " + str() + " is not an integer");
  return checked(v_.get_num());
}

Frac Frac::mod1() const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Frac(mpq_class(r, v_.get_den()));
}

std::ostream& operator<<(std::ostream& os, const Frac& f) { return os << f.str(); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = gcd64(a, b);
  const std::int64_t r = (a / g) * b;
  return r < 0 ? -r : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  mpz_class z(std::to_string(n));
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r.get_si();
}

}  // namespace vvmf
