#pragma once

// Data-parallel kernels. Each kernel has an OpenMP implementation and a
// plain serial reference with the same contract; the test suite checks them
// against each other and bench/ times them.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vvmf/cyclotomic.hpp"
#include "vvmf/frac.hpp"

namespace vvmf::kernels {

/// Sparse coefficient map keyed by exponent numerator (over a shared denominator).
using SparseTerms = std::map<std::int64_t, Frac>;

/// All terms of a*b whose exponent numerator is < limit. Zero sums are dropped.
SparseTerms convolve(const SparseTerms& a, const SparseTerms& b, std::int64_t limit);
SparseTerms convolve_serial(const SparseTerms& a, const SparseTerms& b, std::int64_t limit);

CycloMatrix matmul(const CyclotomicRing& ring, const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix matmul_serial(const CyclotomicRing& ring, const CycloMatrix& a, const CycloMatrix& b);

/// Integer box search for points w = shift + scale*v (v integral, v_i in
/// ranges[i] inclusive) with w^T G w <= bound.
struct BoxScan {
  std::vector<std::vector<std::int64_t>> gram;
  std::vector<std::int64_t> shift;
  std::int64_t scale = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  std::int64_t bound = 0;
};

struct ScanHit {
  std::vector<std::int64_t> point;  // w
  std::int64_t value = 0;           // w^T G w
  friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

/// Hits sorted by (value, point).
std::vector<ScanHit> box_scan(const BoxScan& scan);
std::vector<ScanHit> box_scan_serial(const BoxScan& scan);

}  // namespace vvmf::kernels
