#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "wgram/poly_matrix.hpp"

namespace wgram::testutil {

inline std::filesystem::path data_dir() {
#ifdef WGRAM_DATA_DIR
  return WGRAM_DATA_DIR;
#else
  return "data";
#endif
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("missing fixture " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline PolyMatrix load_dense(const std::string& name) {
  std::ifstream in(data_dir() / name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_matrix(in).as_dense();
}

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long lo, long hi) {
  return Int(long(std::uniform_int_distribution<long>(lo, hi)(rng)));
}

inline IntPoly rand_poly(Rng& rng, int max_deg, long coeff_bound) {
  int d = int(std::uniform_int_distribution<int>(0, max_deg)(rng));
  IntVec c(size_t(d) + 1);
  for (auto& x : c) x = rand_int(rng, -coeff_bound, coeff_bound);
  return IntPoly::from_coeffs(std::move(c));
}

inline IntMatrix rand_matrix(Rng& rng, int rows, int cols, long bound) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rand_int(rng, -bound, bound);
  return m;
}

}  // namespace wgram::testutil
