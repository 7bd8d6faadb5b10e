#ifndef COALITION_FORGE_EXACTLIN_HPP
#define COALITION_FORGE_EXACTLIN_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "coalition_forge/rational.hpp"

namespace coalition_forge {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument on ragged input.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Rational> data() { return data_; }
  std::span<const Rational> data() const { return data_; }

  RationalMatrix transpose() const;
  RationalVector operator*(std::span<const Rational> x) const;
  /// Copy with the rows reordered: result row i is this row order[i].
  RationalMatrix permute_rows(std::span<const std::size_t> order) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& m);

/// Throws std::invalid_argument for non-square input.
bool is_invertible(const RationalMatrix& m);

struct SolveResult {
  enum class Kind { kUnique, kNone, kInfinite };
  Kind kind = Kind::kNone;
  /// The unique solution, or the particular solution with every free
  /// variable set to zero. Empty when kind == kNone.
  RationalVector solution;
  std::size_t nullity = 0;

  bool has_solution() const { return kind != Kind::kNone; }
};

/// Exact Gauss-Jordan solve of m x = b. Throws std::invalid_argument when
/// b.size() != m.rows().
SolveResult solve(const RationalMatrix& m, std::span<const Rational> b);

}  // namespace coalition_forge

#endif  // COALITION_FORGE_EXACTLIN_HPP
