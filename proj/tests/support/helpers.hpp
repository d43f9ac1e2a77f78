#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cohomolab/fields.hpp"
#include "cohomolab/matrix.hpp"

namespace testutil {

inline cohomolab::ExactMatrix<cohomolab::Rationals> qmat(
    const std::vector<std::vector<long>>& rows) {
  return cohomolab::ExactMatrix<cohomolab::Rationals>::from_int_rows(
      cohomolab::Rationals{}, rows);
}

inline cohomolab::ExactMatrix<cohomolab::PrimeField> fpmat(
    std::int64_t p, const std::vector<std::vector<long>>& rows) {
  return cohomolab::ExactMatrix<cohomolab::PrimeField>::from_int_rows(
      cohomolab::PrimeField(p), rows);
}

// Deterministic sparse random matrix with small integer entries.
template <cohomolab::FieldLike F>
cohomolab::ExactMatrix<F> random_matrix(const F& f, int rows, int cols,
                                        double density, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-4, 4);
  cohomolab::ExactMatrix<F> m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (coin(rng) < density) m.add_entry(i, j, f.from_int(val(rng)));
  m.finalize();
  return m;
}

inline std::string corpus_dir() {
  if (const char* env = std::getenv("COHOMOLAB_CORPUS")) return env;
#ifdef COHOMOLAB_SOURCE_DIR
  return std::string(COHOMOLAB_SOURCE_DIR) + "/corpus";
#else
  return "corpus";
#endif
}

}  // namespace testutil
