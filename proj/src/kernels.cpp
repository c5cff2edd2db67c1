#include "vvmf/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace vvmf::kernels {

namespace {

std::int64_t quad_value(const std::vector<std::vector<std::int64_t>>& gram, const std::vector<std::int64_t>& w) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < w.size(); ++j) row += gram[i][j] * w[j];
    total += w[i] * row;
  }
  return total;
}

// All points with the first coordinate fixed to v0.
void scan_slice(const BoxScan& s, std::int64_t v0, std::vector<ScanHit>& out) {
  const std::size_t n = s.ranges.size();
  std::vector<std::int64_t> v(n);
  v[0] = v0;
  for (std::size_t i = 1; i < n; ++i) v[i] = s.ranges[i].first;
  std::vector<std::int64_t> w(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) w[i] = s.shift[i] + s.scale * v[i];
    const std::int64_t value = quad_value(s.gram, w);
    if (value <= s.bound) out.push_back(ScanHit{w, value});
    std::size_t i = 1;
    while (i < n && v[i] == s.ranges[i].second) {
      v[i] = s.ranges[i].first;
      ++i;
    }
    if (i >= n) break;
    ++v[i];
  }
}

void check_scan(const BoxScan& s) {
  const std::size_t n = s.ranges.size();
  if (n == 0 || s.shift.size() != n || s.gram.size() != n) throw std::invalid_argument("box_scan: dimension mismatch");
  for (const auto& [lo, hi] : s.ranges) {
    if (lo > hi) throw std::invalid_argument("box_scan: empty range");
  }
}

void sort_hits(std::vector<ScanHit>& hits) {
  std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
    return a.value != b.value ? a.value < b.value : a.point < b.point;
  });
}

}  // namespace

SparseTerms convolve(const SparseTerms& a, const SparseTerms& b, std::int64_t limit) {
  SparseTerms out;
  if (a.empty() || b.empty()) return out;
  std::vector<std::int64_t> ka;
  std::vector<const Frac*> ca;
  for (const auto& [k, c] : a) {
    ka.push_back(k);
    ca.push_back(&c);
  }
  const std::int64_t lo_b = b.begin()->first;
  const std::int64_t hi_b = b.rbegin()->first;
  std::vector<const Frac*> dense_b(static_cast<std::size_t>(hi_b - lo_b + 1), nullptr);
  for (const auto& [k, c] : b) dense_b[static_cast<std::size_t>(k - lo_b)] = &c;

  const std::int64_t out_lo = ka.front() + lo_b;
  const std::int64_t out_hi = std::min(limit, ka.back() + hi_b + 1);
  if (out_hi <= out_lo) return out;
  const std::int64_t width = out_hi - out_lo;
  const std::int64_t na = static_cast<std::int64_t>(ka.size());
  std::vector<Frac> acc(static_cast<std::size_t>(width));

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t idx = 0; idx < width; ++idx) {
    const std::int64_t n = out_lo + idx;
    Frac sum;
    for (std::int64_t i = 0; i < na; ++i) {
      const std::int64_t j = n - ka[static_cast<std::size_t>(i)];
      if (j > hi_b) continue;
      if (j < lo_b) break;
      const Frac* c = dense_b[static_cast<std::size_t>(j - lo_b)];
      if (c != nullptr) sum += *ca[static_cast<std::size_t>(i)] * *c;
    }
    acc[static_cast<std::size_t>(idx)] = std::move(sum);
  }

  for (std::int64_t idx = 0; idx < width; ++idx) {
    Frac& c = acc[static_cast<std::size_t>(idx)];
    if (!c.is_zero()) out.emplace_hint(out.end(), out_lo + idx, std::move(c));
  }
  return out;
}

SparseTerms convolve_serial(const SparseTerms& a, const SparseTerms& b, std::int64_t limit) {
  SparseTerms out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (ka + kb >= limit) break;
      out[ka + kb] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

CycloMatrix matmul(const CyclotomicRing& ring, const CycloMatrix& a, const CycloMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matmul: dimension mismatch");
  const std::size_t n = a.dim;
  CycloMatrix c{n, std::vector<CycloInt>(n * n, ring.zero())};
  const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r);
    for (std::size_t k = 0; k < n; ++k) {
      const CycloInt& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const CycloInt& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += ring.mul(aik, bkj);
      }
    }
  }
  return c;
}

CycloMatrix matmul_serial(const CyclotomicRing& ring, const CycloMatrix& a, const CycloMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matmul: dimension mismatch");
  const std::size_t n = a.dim;
  CycloMatrix c{n, std::vector<CycloInt>(n * n, ring.zero())};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CycloInt sum = ring.zero();
      for (std::size_t k = 0; k < n; ++k) sum += ring.mul(a.at(i, k), b.at(k, j));
      c.at(i, j) = std::move(sum);
    }
  }
  return c;
}

std::vector<ScanHit> box_scan(const BoxScan& scan) {
  check_scan(scan);
  const auto [lo, hi] = scan.ranges[0];
  const std::int64_t count = hi - lo + 1;
  std::vector<std::vector<ScanHit>> slices(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) scan_slice(scan, lo + i, slices[static_cast<std::size_t>(i)]);
  std::vector<ScanHit> hits;
  for (auto& s : slices) hits.insert(hits.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  sort_hits(hits);
  return hits;
}

std::vector<ScanHit> box_scan_serial(const BoxScan& scan) {
  check_scan(scan);
  std::vector<ScanHit> hits;
  for (std::int64_t v0 = scan.ranges[0].first; v0 <= scan.ranges[0].second; ++v0) scan_slice(scan, v0, hits);
  sort_hits(hits);
  return hits;
}

}  // namespace vvmf::kernels
