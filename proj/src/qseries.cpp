#include "vvmf/qseries.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vvmf/kernels.hpp"

namespace vvmf {

namespace {

std::int64_t scaled_num(const Frac& value, std::int64_t denom) {
  const Frac s = value * Frac(static_cast<long>(denom));
  if (!s.is_integer()) {
    throw std::invalid_argument("FracSeries: " + value.str() + " is not in (1/" + std::to_string(denom) + ")Z");
  }
  return s.to_int64();
}

std::int64_t den64(const Frac& f) {
  const mpz_class d = f.den();
  if (!d.fits_slong_p()) throw std::overflow_error("FracSeries: exponent denominator too large");
  return d.get_si();
}

// f(q^m) for a positive integer m.
FracSeries substitute_power(const FracSeries& f, std::int64_t m) {
  FracSeries::Terms terms;
  for (const auto& [k, c] : f.raw_terms()) terms.emplace(k * m, c);
  return FracSeries(f.denom(), f.prec_num() * m, std::move(terms));
}

FracSeries one_with_prec(const Frac& prec) { return FracSeries(prec, {{Frac(0), Frac(1)}}); }

}  // namespace

FracSeries::FracSeries(Frac prec) : denom_(den64(prec)), prec_num_(prec.num().get_si()) {}

FracSeries::FracSeries(Frac prec, const std::vector<std::pair<Frac, Frac>>& terms) {
  std::int64_t denom = den64(prec);
  for (const auto& [e, c] : terms) denom = lcm64(denom, den64(e));
  denom_ = denom;
  prec_num_ = scaled_num(prec, denom);
  for (const auto& [e, c] : terms) {
    const std::int64_t k = scaled_num(e, denom);
    if (k >= prec_num_) {
      throw std::invalid_argument("FracSeries: exponent " + e.str() + " is not below prec " + prec.str());
    }
    terms_[k] += c;
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

FracSeries::FracSeries(std::int64_t denom, std::int64_t prec_num, Terms terms)
    : denom_(denom), prec_num_(prec_num), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  check_invariants();
}

void FracSeries::check_invariants() const {
  if (denom_ < 1) throw std::invalid_argument("FracSeries: denominator must be positive");
  if (!terms_.empty() && terms_.rbegin()->first >= prec_num_) {
    throw std::invalid_argument("FracSeries: stored exponent at or above precision");
  }
}

Frac FracSeries::lowest() const {
  return Frac(static_cast<long>(lowest_num()), static_cast<long>(denom_));
}

Frac FracSeries::coeff(const Frac& exponent) const {
  if (exponent >= prec()) {
    throw PrecisionError("coefficient at q^" + exponent.str() + " is beyond precision " + prec().str());
  }
  const Frac s = exponent * Frac(static_cast<long>(denom_));
  if (!s.is_integer()) return Frac(0);
  const auto it = terms_.find(s.to_int64());
  return it == terms_.end() ? Frac(0) : it->second;
}

std::vector<std::pair<Frac, Frac>> FracSeries::items() const {
  std::vector<std::pair<Frac, Frac>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(Frac(static_cast<long>(k), static_cast<long>(denom_)), c);
  return out;
}

FracSeries FracSeries::with_denom(std::int64_t denom) const {
  if (denom == denom_) return *this;
  if (denom % denom_ != 0) throw std::invalid_argument("FracSeries::with_denom: not a multiple");
  const std::int64_t f = denom / denom_;
  Terms terms;
  for (const auto& [k, c] : terms_) terms.emplace_hint(terms.end(), k * f, c);
  return FracSeries(denom, prec_num_ * f, std::move(terms));
}

bool operator==(const FracSeries& a, const FracSeries& b) {
  const std::int64_t l = lcm64(a.denom_, b.denom_);
  const FracSeries x = a.with_denom(l);
  const FracSeries y = b.with_denom(l);
  return x.prec_num_ == y.prec_num_ && x.terms_ == y.terms_;
}

FracSeries series_add(const FracSeries& a, const FracSeries& b) {
  const std::int64_t l = lcm64(a.denom(), b.denom());
  const FracSeries x = a.with_denom(l);
  const FracSeries y = b.with_denom(l);
  const std::int64_t prec = std::min(x.prec_num(), y.prec_num());
  FracSeries::Terms terms;
  for (const auto& [k, c] : x.raw_terms()) {
    if (k < prec) terms[k] += c;
  }
  for (const auto& [k, c] : y.raw_terms()) {
    if (k < prec) terms[k] += c;
  }
  return FracSeries(l, prec, std::move(terms));
}

FracSeries series_neg(const FracSeries& a) { return series_scale(a, Frac(-1)); }

FracSeries series_sub(const FracSeries& a, const FracSeries& b) { return series_add(a, series_neg(b)); }

FracSeries series_scale(const FracSeries& a, const Frac& c) {
  FracSeries::Terms terms;
  if (!c.is_zero()) {
    for (const auto& [k, v] : a.raw_terms()) terms.emplace_hint(terms.end(), k, v * c);
  }
  return FracSeries(a.denom(), a.prec_num(), std::move(terms));
}

namespace {

template <class Kernel>
FracSeries mul_with(const FracSeries& a, const FracSeries& b, Kernel kernel) {
  const std::int64_t l = lcm64(a.denom(), b.denom());
  const FracSeries x = a.with_denom(l);
  const FracSeries y = b.with_denom(l);
  const std::int64_t prec = std::min(x.prec_num() + y.lowest_num(), y.prec_num() + x.lowest_num());
  return FracSeries(l, prec, kernel(x.raw_terms(), y.raw_terms(), prec));
}

}  // namespace

FracSeries series_mul(const FracSeries& a, const FracSeries& b) { return mul_with(a, b, kernels::convolve); }

FracSeries series_mul_serial(const FracSeries& a, const FracSeries& b) {
  return mul_with(a, b, kernels::convolve_serial);
}

FracSeries series_inverse(const FracSeries& a) {
  if (a.is_zero()) throw std::domain_error("series_inverse: zero series (or leading term unknown)");
  const std::int64_t lo = a.lowest_num();
  const Frac lead = a.raw_terms().begin()->second;
  const Frac inv_lead = Frac(1) / lead;
  const std::int64_t rel = a.prec_num() - lo;

  // unit part u = a / (lead q^lo) with u_0 = 1; b = 1/u by the usual recurrence.
  std::vector<std::pair<std::int64_t, Frac>> unit;
  for (const auto& [k, c] : a.raw_terms()) {
    if (k != lo) unit.emplace_back(k - lo, c * inv_lead);
  }
  std::vector<Frac> inv(static_cast<std::size_t>(rel));
  inv[0] = Frac(1);
  for (std::int64_t n = 1; n < rel; ++n) {
    Frac acc;
    for (const auto& [i, c] : unit) {
      if (i > n) break;
      const Frac& bj = inv[static_cast<std::size_t>(n - i)];
      if (!bj.is_zero()) acc -= c * bj;
    }
    inv[static_cast<std::size_t>(n)] = acc;
  }
  FracSeries::Terms terms;
  for (std::int64_t n = 0; n < rel; ++n) {
    const Frac& c = inv[static_cast<std::size_t>(n)];
    if (!c.is_zero()) terms.emplace_hint(terms.end(), n - lo, c * inv_lead);
  }
  return FracSeries(a.denom(), rel - lo, std::move(terms));
}

FracSeries series_pow(const FracSeries& a, std::int64_t k) {
  if (k < 0) return series_pow(series_inverse(a), -k);
  if (k == 0) return one_with_prec(a.prec() - a.lowest());
  FracSeries result = a;
  FracSeries base = a;
  --k;
  while (k > 0) {
    if (k & 1) result = series_mul(result, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

FracSeries series_shift(const FracSeries& a, const Frac& e) {
  const std::int64_t l = lcm64(a.denom(), den64(e));
  const FracSeries x = a.with_denom(l);
  const std::int64_t s = scaled_num(e, l);
  FracSeries::Terms terms;
  for (const auto& [k, c] : x.raw_terms()) terms.emplace_hint(terms.end(), k + s, c);
  return FracSeries(l, x.prec_num() + s, std::move(terms));
}

FracSeries truncate(const FracSeries& a, const Frac& prec) {
  if (prec > a.prec()) throw PrecisionError("truncate: " + prec.str() + " exceeds precision " + a.prec().str());
  const std::int64_t l = lcm64(a.denom(), den64(prec));
  const FracSeries x = a.with_denom(l);
  const std::int64_t p = scaled_num(prec, l);
  FracSeries::Terms terms;
  for (const auto& [k, c] : x.raw_terms()) {
    if (k < p) terms.emplace_hint(terms.end(), k, c);
  }
  return FracSeries(l, p, std::move(terms));
}

bool agree(const FracSeries& a, const FracSeries& b) {
  const Frac p = std::min(a.prec(), b.prec());
  return truncate(a, p) == truncate(b, p);
}

FracSeries euler_product(const Frac& prec) {
  std::vector<std::pair<Frac, Frac>> terms;
  if (prec > Frac(0)) {
    // generalized pentagonal numbers k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
    for (std::int64_t j = 0;; ++j) {
      bool any = false;
      for (std::int64_t k : {j, -j}) {
        if (j == 0 && k != 0) continue;
        const std::int64_t e = k * (3 * k - 1) / 2;
        if (Frac(static_cast<long>(e)) < prec) {
          terms.emplace_back(Frac(static_cast<long>(e)), Frac(k % 2 == 0 ? 1 : -1));
          any = true;
        }
        if (j == 0) break;
      }
      if (!any && j > 0) break;
    }
  }
  return FracSeries(prec, terms);
}

FracSeries eta_quotient(const std::vector<EtaFactor>& factors, const Frac& prec) {
  if (factors.empty()) throw std::invalid_argument("eta_quotient: no factors");
  Frac lead;
  for (const auto& f : factors) {
    if (f.multiplier < 1) throw std::invalid_argument("eta_quotient: multiplier must be >= 1");
    lead += Frac(static_cast<long>(f.multiplier * f.power), 24);
  }
  if (prec <= lead) {
    throw std::invalid_argument("eta_quotient: precision " + prec.str() + " does not exceed leading exponent " +
                                lead.str());
  }
  const Frac rel = prec - lead;
  FracSeries unit = one_with_prec(rel);
  for (const auto& f : factors) {
    if (f.power == 0) continue;
    const FracSeries p = substitute_power(euler_product(rel / Frac(static_cast<long>(f.multiplier))), f.multiplier);
    unit = series_mul(unit, series_pow(p, f.power));
  }
  return series_shift(unit, lead);
}

FracSeries eisenstein2(const Frac& prec) {
  if (prec < Frac(1)) throw std::invalid_argument("eisenstein2: precision must be at least 1");
  const std::int64_t n_max = prec.ceil();
  std::vector<std::pair<Frac, Frac>> terms{{Frac(0), Frac(1)}};
  for (std::int64_t n = 1; n < n_max; ++n) {
    std::int64_t sigma = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      sigma += d;
      if (d * d != n) sigma += n / d;
    }
    terms.emplace_back(Frac(static_cast<long>(n)), Frac(static_cast<long>(-24 * sigma)));
  }
  return FracSeries(prec, terms);
}

FracSeries unary_theta(const Frac& m, const Frac& a, const Frac& prec) {
  if (m <= Frac(0)) throw std::invalid_argument("unary_theta: m must be positive");
  std::vector<std::pair<Frac, Frac>> terms;
  const std::int64_t centre = (-a).floor();
  for (std::int64_t n = centre;; --n) {
    const Frac x = Frac(static_cast<long>(n)) + a;
    const Frac e = m * x * x;
    if (e >= prec) break;
    terms.emplace_back(e, Frac(1));
  }
  for (std::int64_t n = centre + 1;; ++n) {
    const Frac x = Frac(static_cast<long>(n)) + a;
    const Frac e = m * x * x;
    if (e >= prec) break;
    terms.emplace_back(e, Frac(1));
  }
  return FracSeries(prec, terms);
}

FracSeries q_derivative(const FracSeries& f) {
  FracSeries::Terms terms;
  const Frac d(static_cast<long>(f.denom()));
  for (const auto& [k, c] : f.raw_terms()) {
    if (k != 0) terms.emplace_hint(terms.end(), k, c * Frac(static_cast<long>(k)) / d);
  }
  return FracSeries(f.denom(), f.prec_num(), std::move(terms));
}

FracSeries serre_derivative(const FracSeries& f, const Frac& weight) {
  const Frac needed = f.prec() - f.lowest();
  const Frac e2_prec(static_cast<long>(std::max<std::int64_t>(1, needed.ceil())));
  const FracSeries e2f = series_mul(eisenstein2(e2_prec), f);
  return series_sub(q_derivative(f), series_scale(e2f, weight / Frac(12)));
}

Frac constant_term(const FracSeries& f) {
  if (f.prec() <= Frac(0)) throw PrecisionError("constant term unknown: precision " + f.prec().str() + " <= 0");
  return f.coeff(Frac(0));
}

void write_series(std::ostream& os, const FracSeries& f) {
  os << "prec " << f.prec() << '\n';
  for (const auto& [e, c] : f.items()) os << e << ' ' << c << '\n';
}

FracSeries read_series(std::istream& is) {
  std::string line;
  bool have_prec = false;
  Frac prec;
  std::vector<std::pair<Frac, Frac>> terms;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw std::invalid_argument("read_series: malformed line '" + line + "'");
    if (a == "prec") {
      prec = Frac::parse(b);
      have_prec = true;
    } else {
      terms.emplace_back(Frac::parse(a), Frac::parse(b));
    }
  }
  if (!have_prec) throw std::invalid_argument("read_series: missing 'prec' header");
  return FracSeries(prec, terms);
}

}  // namespace vvmf
