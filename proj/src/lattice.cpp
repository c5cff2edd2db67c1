#include "vvmf/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "vvmf/cyclotomic.hpp"
#include "vvmf/kernels.hpp"

namespace vvmf {

namespace {

std::int64_t den64(const Frac& f) { return mpz_class(f.den()).get_si(); }

RatVector reduce_mod1(const RatVector& x) {
  RatVector r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(c.mod1());
  return r;
}

std::int64_t order_of(const RatVector& coords) {
  std::int64_t n = 1;
  for (const auto& c : coords) n = lcm64(n, den64(c));
  return n;
}

std::vector<std::int64_t> odd_prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    if (p != 2) out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 2) out.push_back(n);
  return out;
}

}  // namespace

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (auto v : m[i]) r[i].push_back(Frac(static_cast<long>(v)));
  }
  return r;
}

Frac determinant(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t n = a.size();
  Frac det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Frac(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Frac f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Frac(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Frac pivot = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= pivot;
      inv[c][k] /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Frac f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t n = input.size();
  IntMatrix a = input;
  IntMatrix u(n, std::vector<std::int64_t>(n, 0));
  IntMatrix v = u;
  for (std::size_t i = 0; i < n; ++i) u[i][i] = v[i][i] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(a[r][i], a[r][j]);
      std::swap(v[r][i], v[r][j]);
    }
  };
  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t k) {  // row dst += k row src
    for (std::size_t c = 0; c < n; ++c) {
      a[dst][c] += k * a[src][c];
      u[dst][c] += k * u[src][c];
    }
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t r = 0; r < n; ++r) {
      a[r][dst] += k * a[r][src];
      v[r][dst] += k * v[r][src];
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] != 0 && (bi == n || std::abs(a[i][j]) < std::abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == n) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        const std::int64_t q = floor_div(a[i][t], a[t][t]);
        if (q != 0) add_row(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const std::int64_t q = floor_div(a[t][j], a[t][t]);
        if (q != 0) add_col(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (std::size_t c = 0; c < n; ++c) {
        a[t][c] = -a[t][c];
        u[t][c] = -u[t][c];
      }
    }
  }
  SmithForm s{std::move(u), std::move(v), {}};
  for (std::size_t i = 0; i < n; ++i) s.divisors.push_back(a[i][i]);
  return s;
}

EvenLattice::EvenLattice(IntMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw std::invalid_argument("EvenLattice: empty Gram matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("EvenLattice: Gram matrix is not square");
    if (gram_[i][i] % 2 != 0) throw std::invalid_argument("EvenLattice: odd diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("EvenLattice: Gram matrix is not symmetric");
    }
  }
  det_ = determinant(to_rational(gram_)).to_int64();
  if (det_ == 0) throw std::invalid_argument("EvenLattice: degenerate Gram matrix");
}

bool EvenLattice::is_positive_definite() const {
  // Sylvester: all leading principal minors positive.
  for (std::size_t k = 1; k <= rank(); ++k) {
    RatMatrix minor(k, RatVector(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = Frac(static_cast<long>(gram_[i][j]));
    }
    if (determinant(minor) <= Frac(0)) return false;
  }
  return true;
}

Frac EvenLattice::inner(const RatVector& x, const RatVector& y) const {
  if (x.size() != rank() || y.size() != rank()) throw std::invalid_argument("inner: dimension mismatch");
  Frac total;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i].is_zero()) continue;
    Frac row;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (gram_[i][j] != 0 && !y[j].is_zero()) row += Frac(static_cast<long>(gram_[i][j])) * y[j];
    }
    total += x[i] * row;
  }
  return total;
}

std::string coset_label(const RatVector& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += coords[i].str();
  }
  return s + ")";
}

DiscriminantForm::DiscriminantForm(const EvenLattice& lattice)
    : lattice_(lattice), gram_inv_(inverse(to_rational(lattice.gram()))) {
  const SmithForm snf = smith_normal_form(lattice.gram());
  const std::size_t n = lattice.rank();
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = snf.divisors[i];
    if (d == 1) continue;
    RatVector g(n);
    for (std::size_t r = 0; r < n; ++r) g[r] = Frac(static_cast<long>(snf.v[r][i]), static_cast<long>(d));
    orders_.push_back(d);
    generators_.push_back(reduce_mod1(g));
  }

  std::vector<RatVector> elems{RatVector(n)};
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    std::vector<RatVector> next;
    for (const auto& e : elems) {
      for (std::int64_t k = 0; k < orders_[g]; ++k) {
        RatVector x = e;
        for (std::size_t r = 0; r < n; ++r) x[r] += Frac(static_cast<long>(k)) * generators_[g][r];
        next.push_back(reduce_mod1(x));
      }
    }
    elems = std::move(next);
  }
  for (auto& e : elems) elements_.push_back(Coset{std::move(e)});
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end() ||
      static_cast<std::int64_t>(elements_.size()) != std::abs(lattice.det())) {
    throw std::logic_error("DiscriminantForm: Smith generators do not enumerate L'/L");
  }

  for (const auto& e : elements_) {
    const Frac q = lattice_.norm(e.coords).mod1();
    level_ = lcm64(level_, den64(q));
    qvals_.push_back(q);
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    RatVector neg = elements_[i].coords;
    for (auto& c : neg) c = -c;
    neg_.push_back(index_of(neg));
  }
}

bool DiscriminantForm::contains(const RatVector& coords) const {
  if (coords.size() != lattice_.rank()) return false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Frac row;
    for (std::size_t j = 0; j < coords.size(); ++j) row += Frac(static_cast<long>(lattice_.gram()[i][j])) * coords[j];
    if (!row.is_integer()) return false;
  }
  return true;
}

std::size_t DiscriminantForm::index_of(const RatVector& coords) const {
  if (!contains(coords)) throw std::invalid_argument("index_of: " + coset_label(coords) + " is not in the dual lattice");
  const Coset key{reduce_mod1(coords)};
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), key);
  if (it == elements_.end() || !(*it == key)) throw std::logic_error("index_of: coset missing");
  return static_cast<std::size_t>(it - elements_.begin());
}

Frac DiscriminantForm::pairing(std::size_t i, std::size_t j) const {
  return lattice_.inner(elements_[i].coords, elements_[j].coords).mod1();
}

std::size_t DiscriminantForm::add_index(std::size_t i, std::size_t j) const {
  RatVector x = elements_[i].coords;
  for (std::size_t r = 0; r < x.size(); ++r) x[r] += elements_[j].coords[r];
  return index_of(x);
}

std::size_t DiscriminantForm::scale_index(std::size_t i, std::int64_t k) const {
  RatVector x = elements_[i].coords;
  for (auto& c : x) c *= Frac(static_cast<long>(k));
  return index_of(x);
}

std::int64_t cyclotomic_order(const DiscriminantForm& d) {
  std::int64_t order = lcm64(8, d.level());
  for (auto p : odd_prime_factors(static_cast<std::int64_t>(d.size()))) order = lcm64(order, p);
  return order;
}

int signature_mod8(const DiscriminantForm& d, std::size_t max_order) {
  if (d.size() > max_order) {
    throw std::invalid_argument("signature_mod8: |D| = " + std::to_string(d.size()) + " exceeds the enumeration bound");
  }
  const std::int64_t order = cyclotomic_order(d);
  const CyclotomicRing ring(order);
  CycloInt gauss = ring.zero();
  for (std::size_t i = 0; i < d.size(); ++i) gauss += ring.exp2pii(d.q(i));
  const auto n = static_cast<std::int64_t>(d.size());
  if (!(ring.mul(gauss, ring.conj(gauss)) == ring.from_int(n))) {
    throw std::domain_error("signature_mod8: |sum e(Q(x))|^2 != |D|; not an even discriminant form");
  }
  const CycloInt root = ring.sqrt_abs(n);
  for (int s = 0; s < 8; ++s) {
    if (ring.mul(root, ring.root(s * order / 8)) == gauss) return s;
  }
  throw std::domain_error("signature_mod8: Gauss sum is not sqrt|D| times an 8th root of unity");
}

bool is_fundamental_discriminant(std::int64_t disc) {
  auto squarefree = [](std::int64_t n) {
    n = std::abs(n);
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % (p * p) == 0) return false;
    }
    return true;
  };
  if (disc == 0 || disc == 1) return false;
  if (mod_floor(disc, 4) == 1) return squarefree(disc);
  if (mod_floor(disc, 4) != 0) return false;
  const std::int64_t k = disc / 4;
  const std::int64_t r = mod_floor(k, 4);
  return (r == 2 || r == 3) && squarefree(k);
}

EvenLattice ok_lattice(std::int64_t d) {
  if (d <= 0 || !is_fundamental_discriminant(-d)) {
    throw std::invalid_argument("ok_lattice: -" + std::to_string(d) + " is not an imaginary quadratic field discriminant");
  }
  if (d % 4 == 3) return EvenLattice({{2, 1}, {1, (1 + d) / 2}});
  return EvenLattice({{2, 0}, {0, d / 2}});
}

EvenLattice hermitian_lattice(std::int64_t d) {
  const IntMatrix block = ok_lattice(d).gram();
  IntMatrix g(6, std::vector<std::int64_t>(6, 0));
  g[0][5] = g[5][0] = 1;
  g[1][4] = g[4][1] = 1;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) g[2 + i][2 + j] = block[i][j];
  }
  return EvenLattice(std::move(g));
}

const std::vector<std::int64_t>& standard_discriminants() {
  static const std::vector<std::int64_t> ds{4, 7, 8, 11, 15, 19, 20, 24};
  return ds;
}

namespace {

template <class Scan>
std::vector<LatticeVector> enumerate_with(const EvenLattice& lattice, const RatVector& gamma, const Frac& max_norm,
                                          Scan scan) {
  if (!lattice.is_positive_definite()) throw std::invalid_argument("enumerate_vectors: lattice is not positive definite");
  const std::size_t n = lattice.rank();
  if (gamma.size() != n) throw std::invalid_argument("enumerate_vectors: coset has wrong dimension");
  if (max_norm < Frac(0)) return {};

  const RatVector g = reduce_mod1(gamma);
  const std::int64_t delta = order_of(g);
  const RatMatrix inv = inverse(to_rational(lattice.gram()));

  kernels::BoxScan box;
  box.gram = lattice.gram();
  box.scale = delta;
  box.bound = (Frac(2 * delta * delta) * max_norm).floor();
  for (std::size_t i = 0; i < n; ++i) {
    box.shift.push_back((g[i] * Frac(static_cast<long>(delta))).to_int64());
    // |lambda_i|^2 <= 2 max_norm (G^{-1})_ii
    const std::int64_t r2 = (Frac(2) * max_norm * inv[i][i]).ceil();
    const std::int64_t r = isqrt(r2) + 1;
    box.ranges.emplace_back((Frac(-r) - g[i]).floor(), (Frac(r) - g[i]).ceil());
  }

  std::vector<LatticeVector> out;
  for (const auto& hit : scan(box)) {
    LatticeVector v;
    for (auto w : hit.point) v.coords.push_back(Frac(static_cast<long>(w), static_cast<long>(delta)));
    v.norm = Frac(static_cast<long>(hit.value), static_cast<long>(2 * delta * delta));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<LatticeVector> enumerate_vectors(const EvenLattice& lattice, const RatVector& gamma, const Frac& max_norm) {
  return enumerate_with(lattice, gamma, max_norm, kernels::box_scan);
}

std::vector<LatticeVector> enumerate_vectors_serial(const EvenLattice& lattice, const RatVector& gamma,
                                                    const Frac& max_norm) {
  return enumerate_with(lattice, gamma, max_norm, kernels::box_scan_serial);
}

std::vector<CosetPair> heegner_components(const DiscriminantForm& d, const Frac& m) {
  if (m <= Frac(0)) throw std::invalid_argument("heegner_components: m must be positive");
  const Frac target = m.mod1();
  std::vector<CosetPair> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.q(i) == target && i <= d.neg_index(i)) out.push_back({i, d.neg_index(i)});
  }
  return out;
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
}

void write_discriminant_form(std::ostream& os, const DiscriminantForm& d) {
  os << "order " << d.size() << '\n' << "orders";
  for (auto o : d.orders()) os << ' ' << o;
  os << '\n' << "level " << d.level() << '\n';
  for (std::size_t i = 0; i < d.size(); ++i) {
    os << "coset " << d.label(i) << " Q " << d.q(i) << " order " << order_of(d.element(i).coords) << '\n';
  }
}

}  // namespace vvmf
