#include "gpl/matrix.hpp"

namespace gpl {

ExactMatrix::ExactMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(std::vector<FieldElem>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = row; r < rows; ++r)
      if (!a[r * cols + col].is_zero()) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[sel * cols + c], a[row * cols + c]);
    FieldElem inv = a[row * cols + col].inv();
    for (std::size_t c = col; c < cols; ++c) a[row * cols + c] = a[row * cols + c] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      FieldElem f = a[r * cols + col];
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < cols; ++c)
        a[r * cols + c] = a[r * cols + c] - f * a[row * cols + c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t ExactMatrix::rank() const {
  auto a = data_;
  return rref(a, rows_, cols_).size();
}

std::vector<std::vector<FieldElem>> kernel(const ExactMatrix& m) {
  std::vector<FieldElem> a(m.rows() * m.cols(), m.field()->zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r * m.cols() + c] = m.at(r, c);
  std::vector<std::size_t> pivots = rref(a, m.rows(), m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldElem> v(m.cols(), m.field()->zero());
    v[free_col] = m.field()->one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r * m.cols() + free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace gpl
