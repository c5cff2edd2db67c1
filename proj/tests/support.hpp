#pragma once

#include <random>

#include "vvmf/qseries.hpp"

namespace testing_support {

// Random series with exponents in (1/denom)Z, lowest exponent >= lo/denom,
// known below prec_num/denom.
inline vvmf::FracSeries random_series(std::mt19937_64& rng, std::int64_t denom, std::int64_t lo, std::int64_t prec_num) {
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> keep(0, 2);
  std::vector<std::pair<vvmf::Frac, vvmf::Frac>> terms;
  for (std::int64_t e = lo; e < prec_num; ++e) {
    if (keep(rng) == 0) continue;
    terms.emplace_back(vvmf::Frac(static_cast<long>(e), static_cast<long>(denom)), vvmf::Frac(coef(rng), 1 + keep(rng)));
  }
  return vvmf::FracSeries(vvmf::Frac(static_cast<long>(prec_num), static_cast<long>(denom)), terms);
}

}  // namespace testing_support
