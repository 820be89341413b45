#include "jointslab/linalg.hpp"

#include <utility>

namespace jointslab {

namespace {

// Reduced row echelon form. Pivots take the first row with a nonzero entry
// in the current column, so the result is deterministic for a given input.
struct Echelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivot_cols;
};

Echelon rref(const Matrix& m) {
    std::vector<Vector> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r].reserve(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(m.at(r, c));
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = pivot_row; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) { found = r; break; }
        }
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        FieldElement inv = rows[pivot_row][col].inverse();
        for (std::size_t c = col; c < m.cols(); ++c) rows[pivot_row][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            FieldElement factor = rows[r][col];
            for (std::size_t c = col; c < m.cols(); ++c)
                rows[r][c] -= factor * rows[pivot_row][c];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return {std::move(rows), std::move(pivot_cols)};
}

}  // namespace

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::vector<Vector> nullspace_basis(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v(m.cols(), m.spec().zero());
        v[free_col] = m.spec().one();
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.rows[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const Matrix& m, const Vector& rhs, Vector& out) {
    Matrix aug(m.spec(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    Echelon e = rref(aug);
    for (std::size_t c : e.pivot_cols)
        if (c == m.cols()) return false;  // row [0 ... 0 | 1]
    out.assign(m.cols(), m.spec().zero());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        out[e.pivot_cols[i]] = e.rows[i][m.cols()];
    return true;
}

}  // namespace jointslab
