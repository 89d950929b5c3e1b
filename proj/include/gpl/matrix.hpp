#pragma once

// Exact dense matrices over a Field and right-nullspace computation by
// Gaussian elimination with deterministic pivoting.

#include <cstddef>
#include <vector>

#include "gpl/field.hpp"

namespace gpl {

class ExactMatrix {
public:
  ExactMatrix(FieldPtr f, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;

private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> data_;
};

// Basis of {v : M v = 0}; pivots chosen first nonzero column, smallest row
// index, so the basis is deterministic (one vector per free column, ascending).
std::vector<std::vector<FieldElem>> kernel(const ExactMatrix& m);

} // namespace gpl
