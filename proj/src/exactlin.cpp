#include "coalition_forge/exactlin.hpp"

#include <stdexcept>
#include <utility>

#include "coalition_forge/kernels.hpp"

namespace coalition_forge {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
    }
  }
  return y;
}

RationalMatrix RationalMatrix::permute_rows(std::span<const std::size_t> order) const {
  if (order.size() != rows_) throw std::invalid_argument("row permutation has wrong length");
  RationalMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(order[r], c);
  }
  return out;
}

namespace {

struct Echelon {
  std::vector<std::size_t> pivot_cols;  // pivot column of row i
};

// Reduced row echelon form over the first `pivot_limit` columns, in place.
// Pivot choice is the first nonzero entry at or below the current row.
Echelon reduce(RationalMatrix& m, std::size_t pivot_limit) {
  Echelon e;
  std::size_t row = 0;
  auto data = m.data();
  for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    }
    const Rational pivot = m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) /= pivot;
    kernels::eliminate(data, m.cols(), row, col, 0, m.rows());
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return reduce(work, work.cols()).pivot_cols.size();
}

bool is_invertible(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("is_invertible requires a square matrix");
  return rank(m) == m.rows();
}

SolveResult solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side has " + std::to_string(b.size()) + " entries for " +
                                std::to_string(m.rows()) + " rows");
  }
  const std::size_t n = m.cols();
  RationalMatrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n) = b[r];
  }
  const Echelon e = reduce(aug, n);
  const std::size_t rk = e.pivot_cols.size();
  for (std::size_t r = rk; r < aug.rows(); ++r) {
    if (!aug.at(r, n).is_zero()) return SolveResult{SolveResult::Kind::kNone, {}, 0};
  }
  SolveResult out;
  out.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < rk; ++i) out.solution[e.pivot_cols[i]] = aug.at(i, n);
  out.nullity = n - rk;
  out.kind = out.nullity == 0 ? SolveResult::Kind::kUnique : SolveResult::Kind::kInfinite;
  return out;
}

}  // namespace coalition_forge
