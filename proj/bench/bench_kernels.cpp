// Serial vs OpenMP timings for the three kernels.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "vvmf/kernels.hpp"
#include "vvmf/lattice.hpp"
#include "vvmf/weilrep.hpp"

using namespace vvmf;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-10s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  kernels::SparseTerms a, b;
  for (std::int64_t e = 0; e < 1500; ++e) {
    a[e] = Frac(coef(rng), 1 + (e % 7));
    if (e % 2 == 0) b[e] = Frac(coef(rng));
  }
  kernels::SparseTerms ca, cb;
  const double cs = seconds([&] { ca = kernels::convolve_serial(a, b, 1500); }, 1);
  const double cp = seconds([&] { cb = kernels::convolve(a, b, 1500); }, 1);
  row("convolve", cs, cp, ca == cb);

  const DiscriminantForm disc(hermitian_lattice(24));
  const auto ring = weil_ring(disc);
  const WeilMatrix s = weil_S(disc, 2, ring);
  const WeilMatrix t = weil_T(disc, ring);
  CycloMatrix ma, mb;
  const double ms = seconds([&] { ma = kernels::matmul_serial(*ring, s.matrix, t.matrix); }, 1);
  const double mp = seconds([&] { mb = kernels::matmul(*ring, s.matrix, t.matrix); }, 1);
  row("matmul", ms, mp, ma.entries == mb.entries);

  const EvenLattice l(IntMatrix{{2, 1, 0, 0}, {1, 10, 0, 0}, {0, 0, 4, 1}, {0, 0, 1, 6}});
  std::vector<LatticeVector> va, vb;
  const double es = seconds([&] { va = enumerate_vectors_serial(l, {Frac(0), Frac(0), Frac(0), Frac(0)}, Frac(40)); }, 1);
  const double ep = seconds([&] { vb = enumerate_vectors(l, {Frac(0), Frac(0), Frac(0), Frac(0)}, Frac(40)); }, 1);
  row("box_scan", es, ep, va == vb);
  std::printf("vectors of norm <= 40: %zu\n", va.size());
  return 0;
}
