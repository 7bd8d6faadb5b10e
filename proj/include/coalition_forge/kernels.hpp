#ifndef COALITION_FORGE_KERNELS_HPP
#define COALITION_FORGE_KERNELS_HPP

// Data-parallel inner loops. Each kernel has an OpenMP version in
// coalition_forge::kernels and a single-threaded reference in
// coalition_forge::kernels::serial. Arithmetic is exact, so both produce
// identical results regardless of thread count or merge order.

#include <cstddef>
#include <span>
#include <vector>

#include "coalition_forge/core.hpp"

namespace coalition_forge::kernels {

/// Shapley value of a game on all subsets of n players. dense[m] is v of
/// the coalition with bitmask m; dense[0] is ignored (treated as 0).
/// dense.size() must be 2^n.
std::vector<Rational> shapley(std::span<const Rational> dense, int n);

/// Materializes sum_S coeffs[S] * [S meets T] for every mask T of n
/// players. Result has size 2^n with result[0] = 0.
std::vector<Rational> meet_extension(std::span<const Coalition> supports, std::span<const Rational> coeffs, int n);

/// One Gauss-Jordan step on a row-major matrix with `cols` columns: for
/// every row r in [row_begin, row_end) other than pivot_row, subtracts
/// (m[r][col] / m[pivot_row][col]) times the pivot row, on columns
/// [col, cols). The pivot entry must be nonzero.
void eliminate(std::span<Rational> data, std::size_t cols, std::size_t pivot_row, std::size_t col,
               std::size_t row_begin, std::size_t row_end);

/// Number of threads OpenMP would use (1 when built without OpenMP).
int max_threads();

namespace serial {

std::vector<Rational> shapley(std::span<const Rational> dense, int n);
std::vector<Rational> meet_extension(std::span<const Coalition> supports, std::span<const Rational> coeffs, int n);
void eliminate(std::span<Rational> data, std::size_t cols, std::size_t pivot_row, std::size_t col,
               std::size_t row_begin, std::size_t row_end);

}  // namespace serial

namespace detail {

/// s!(n-1-s)!/n! for s = 0..n-1.
std::vector<Rational> shapley_weights(int n);

}  // namespace detail

}  // namespace coalition_forge::kernels

#endif  // COALITION_FORGE_KERNELS_HPP
