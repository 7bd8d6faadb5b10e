#include <stdexcept>

#include "coalition_forge/kernels.hpp"

namespace coalition_forge::kernels {

namespace detail {

std::vector<Rational> shapley_weights(int n) {
  std::vector<Rational> w;
  w.reserve(static_cast<std::size_t>(n));
  const Rational n_fact = factorial(static_cast<unsigned>(n));
  for (int s = 0; s < n; ++s) {
    w.push_back(factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(n - 1 - s)) / n_fact);
  }
  return w;
}

}  // namespace detail

namespace serial {

// Direct marginal-contribution form: for each player, walk every S not
// containing it.
std::vector<Rational> shapley(std::span<const Rational> dense, int n) {
  if (dense.size() != (std::size_t{1} << n)) throw std::invalid_argument("dense game has wrong length");
  const auto weights = detail::shapley_weights(n);
  const Coalition::Mask full = (Coalition::Mask{1} << n);
  std::vector<Rational> phi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Coalition::Mask bit = Coalition::Mask{1} << i;
    for (Coalition::Mask s = 0; s < full; ++s) {
      if (s & bit) continue;
      const Rational& with = dense[s | bit];
      const Rational without = s == 0 ? Rational(0) : dense[s];
      phi[static_cast<std::size_t>(i)] += weights[static_cast<std::size_t>(std::popcount(s))] * (with - without);
    }
  }
  return phi;
}

// Support-major: scatter each coefficient onto the coalitions it meets.
std::vector<Rational> meet_extension(std::span<const Coalition> supports, std::span<const Rational> coeffs, int n) {
  if (supports.size() != coeffs.size()) throw std::invalid_argument("supports and coefficients differ in length");
  std::vector<Rational> out(std::size_t{1} << n);
  for (std::size_t k = 0; k < supports.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (Coalition::Mask t = 1; t < out.size(); ++t) {
      if (supports[k].meets(Coalition(t))) out[t] += coeffs[k];
    }
  }
  return out;
}

void eliminate(std::span<Rational> data, std::size_t cols, std::size_t pivot_row, std::size_t col,
               std::size_t row_begin, std::size_t row_end) {
  const Rational pivot = data[pivot_row * cols + col];
  for (std::size_t r = row_begin; r < row_end; ++r) {
    if (r == pivot_row) continue;
    const Rational factor_num = data[r * cols + col];
    if (factor_num.is_zero()) continue;
    const Rational factor = factor_num / pivot;
    for (std::size_t c = col; c < cols; ++c) data[r * cols + c] -= factor * data[pivot_row * cols + c];
  }
}

}  // namespace serial
}  // namespace coalition_forge::kernels
