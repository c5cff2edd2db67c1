#include "vvmf/cyclotomic.hpp"

#include <stdexcept>
#include <string>

namespace vvmf {

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: coefficient overflow");
  return r;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: coefficient overflow");
  return r;
}

// Exact division by a monic integer polynomial; the remainder must vanish.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic: bad division");
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic: inexact division");
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

bool CycloInt::is_zero() const {
  for (auto c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = add_checked(coeffs[i], o.coeffs[i]);
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = add_checked(coeffs[i], -o.coeffs[i]);
  return *this;
}

CycloInt operator-(CycloInt a) {
  for (auto& c : a.coeffs) c = -c;
  return a;
}

CycloInt CycloInt::scaled(std::int64_t k) const {
  CycloInt r = *this;
  for (auto& c : r.coeffs) c = mul_checked(c, k);
  return r;
}

CyclotomicRing::CyclotomicRing(std::int64_t order) : order_(order), modulus_(cyclotomic_polynomial(order)) {
  roots_.reserve(static_cast<std::size_t>(order));
  for (std::int64_t j = 0; j < order; ++j) {
    std::vector<std::int64_t> mono(static_cast<std::size_t>(j) + 1, 0);
    mono[static_cast<std::size_t>(j)] = 1;
    roots_.push_back(reduce(std::move(mono)));
  }
}

CycloInt CyclotomicRing::reduce(std::vector<std::int64_t> poly) const {
  const std::size_t deg = degree();
  for (std::size_t k = poly.size(); k-- > deg;) {
    const std::int64_t c = poly[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) {
      poly[k - deg + i] = add_checked(poly[k - deg + i], -mul_checked(c, modulus_[i]));
    }
  }
  poly.resize(deg, 0);
  return CycloInt{std::move(poly)};
}

CycloInt CyclotomicRing::zero() const { return CycloInt{std::vector<std::int64_t>(degree(), 0)}; }

CycloInt CyclotomicRing::from_int(std::int64_t k) const {
  CycloInt r = zero();
  r.coeffs[0] = k;
  return r;
}

const CycloInt& CyclotomicRing::root(std::int64_t j) const {
  return roots_[static_cast<std::size_t>(mod_floor(j, order_))];
}

const CycloInt& CyclotomicRing::exp2pii(const Frac& r) const {
  const Frac scaled = r * Frac(static_cast<long>(order_));
  if (!scaled.is_integer()) {
    throw std::domain_error("exp2pii: " + r.str() + " is not in (1/" + std::to_string(order_) + ")Z");
  }
  return root(scaled.to_int64());
}

CycloInt CyclotomicRing::mul(const CycloInt& a, const CycloInt& b) const {
  const std::size_t deg = degree();
  std::vector<std::int64_t> prod(deg == 0 ? 1 : 2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coeffs[j] == 0) continue;
      prod[i + j] = add_checked(prod[i + j], mul_checked(a.coeffs[i], b.coeffs[j]));
    }
  }
  return reduce(std::move(prod));
}

CycloInt CyclotomicRing::conj(const CycloInt& a) const {
  CycloInt r = zero();
  for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
    if (a.coeffs[j] == 0) continue;
    r += root(-static_cast<std::int64_t>(j)).scaled(a.coeffs[j]);
  }
  return r;
}

CycloInt CyclotomicRing::sqrt_abs(std::int64_t n) const {
  if (n <= 0) throw std::domain_error("sqrt_abs: argument must be positive");
  CycloInt result = from_int(1);
  std::int64_t rest = n;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e == 0) continue;
    std::int64_t square_part = 1;
    for (int i = 0; i < e / 2; ++i) square_part *= p;
    result = result.scaled(square_part);
    if (e % 2 == 0) continue;
    CycloInt root_p = zero();
    if (p == 2) {
      if (order_ % 8 != 0) throw std::domain_error("sqrt_abs: sqrt(2) needs 8 | M");
      root_p = root(order_ / 8) + root(-order_ / 8);
    } else {
      if (order_ % p != 0) {
        throw std::domain_error("sqrt_abs: prime " + std::to_string(p) + " does not divide M");
      }
      CycloInt gauss = zero();
      for (std::int64_t x = 0; x < p; ++x) gauss += root((order_ / p) * ((x * x) % p));
      if (p % 4 == 1) {
        root_p = gauss;
      } else {
        if (order_ % 4 != 0) throw std::domain_error("sqrt_abs: need 4 | M");
        root_p = -mul(root(order_ / 4), gauss);  // gauss = i*sqrt(p)
      }
    }
    result = mul(result, root_p);
  }
  if (!(mul(result, result) == from_int(n))) throw std::logic_error("sqrt_abs: square check failed");
  return result;
}

}  // namespace vvmf
