#include <bit>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coalition_forge/kernels.hpp"

namespace coalition_forge::kernels {

namespace {

// Below this many scalar updates the fork/join costs more than it saves.
constexpr std::size_t kParallelThreshold = 4096;

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Coalition-major form: every v(T) enters phi_i with weight w(|T|-1) for
// i in T and with -w(|T|) for i outside T. Threads accumulate private
// vectors that are merged afterwards.
std::vector<Rational> shapley(std::span<const Rational> dense, int n) {
  if (dense.size() != (std::size_t{1} << n)) throw std::invalid_argument("dense game has wrong length");
  const auto weights = detail::shapley_weights(n);
  const auto count = static_cast<std::int64_t>(dense.size());
  const auto players = static_cast<std::size_t>(n);
  std::vector<Rational> phi(players);

#pragma omp parallel if (dense.size() * players >= kParallelThreshold)
  {
    std::vector<Rational> local(players);
#pragma omp for schedule(static)
    for (std::int64_t t = 1; t < count; ++t) {
      const Rational& v = dense[static_cast<std::size_t>(t)];
      if (v.is_zero()) continue;
      const int size = std::popcount(static_cast<Coalition::Mask>(t));
      const Rational gain = weights[static_cast<std::size_t>(size - 1)] * v;
      const Rational loss = size < n ? weights[static_cast<std::size_t>(size)] * v : Rational(0);
      for (std::size_t i = 0; i < players; ++i) {
        if ((t >> i) & 1) {
          local[i] += gain;
        } else {
          local[i] -= loss;
        }
      }
    }
#pragma omp critical(coalition_forge_shapley_merge)
    for (std::size_t i = 0; i < players; ++i) phi[i] += local[i];
  }
  return phi;
}

std::vector<Rational> meet_extension(std::span<const Coalition> supports, std::span<const Rational> coeffs, int n) {
  if (supports.size() != coeffs.size()) throw std::invalid_argument("supports and coefficients differ in length");
  std::vector<Rational> out(std::size_t{1} << n);
  const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (out.size() * supports.size() >= kParallelThreshold)
  for (std::int64_t t = 1; t < count; ++t) {
    const Coalition target(static_cast<Coalition::Mask>(t));
    Rational sum;
    for (std::size_t k = 0; k < supports.size(); ++k) {
      if (supports[k].meets(target)) sum += coeffs[k];
    }
    out[static_cast<std::size_t>(t)] = sum;
  }
  return out;
}

void eliminate(std::span<Rational> data, std::size_t cols, std::size_t pivot_row, std::size_t col,
               std::size_t row_begin, std::size_t row_end) {
  const Rational pivot = data[pivot_row * cols + col];
  const auto begin = static_cast<std::int64_t>(row_begin);
  const auto end = static_cast<std::int64_t>(row_end);
#pragma omp parallel for schedule(dynamic, 4) if ((row_end - row_begin) * (cols - col) >= kParallelThreshold)
  for (std::int64_t ri = begin; ri < end; ++ri) {
    const auto r = static_cast<std::size_t>(ri);
    if (r == pivot_row || data[r * cols + col].is_zero()) continue;
    const Rational factor = data[r * cols + col] / pivot;
    for (std::size_t c = col; c < cols; ++c) data[r * cols + c] -= factor * data[pivot_row * cols + c];
  }
}

}  // namespace coalition_forge::kernels
