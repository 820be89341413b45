#pragma once

#include <cstddef>
#include <vector>

#include "jointslab/field.hpp"

namespace jointslab {

// Dense row-major matrix of exact field scalars.
class Matrix {
  public:
    Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
        : spec_(std::move(spec)), rows_(rows), cols_(cols), data_(rows * cols, spec_.zero()) {}

    const FieldSpec& spec() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

using Vector = std::vector<FieldElement>;

std::size_t rank(const Matrix& m);

// Basis of the right nullspace, deterministic: columns are scanned left to
// right, each free column yields one basis vector carrying 1 in that slot,
// and vectors are listed in ascending free-column order.
std::vector<Vector> nullspace_basis(const Matrix& m);

// One solution of m x = rhs with every free variable set to zero. Returns
// false when the system is inconsistent.
bool solve(const Matrix& m, const Vector& rhs, Vector& out);

}  // namespace jointslab
