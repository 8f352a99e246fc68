#pragma once

#include <vector>

#include "rq/laurent.hpp"
#include "rq/presentation.hpp"

namespace rq {

/// Dense matrix over Z[A, A^-1].
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int i, int j) { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const LaurentPoly& at(int i, int j) const { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }

    LaurentMatrix without_row_col(int row, int col) const;

    /// Exact determinant by fraction-free elimination.
    LaurentPoly determinant() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> data_;
};

/// Presentation matrix of the abelianized quandle as a Z[A^+-]-module:
/// rows = relations, columns = generators. A relation x_i |> x_j = x_k gives
/// (1-A) e_i + A e_j - e_k; inverse-operation relations solve for the result,
/// giving A^-1(1-A) e_i - A^-1 e_j + e_k.
LaurentMatrix alexander_matrix(const QuandlePresentation& p);

struct AlexanderResult {
    LaurentPoly polynomial;
    bool degenerate = false; // the chosen minor vanished
};

/// Determinant of the minor with the last column and one dependent row
/// removed (row -1 = the last row), normalized by +-A^k so the lowest term
/// is a positive constant. Expects a square matrix or one already missing a
/// redundant row.
AlexanderResult alexander_polynomial(const LaurentMatrix& m, int deleted_row = -1);

/// +-A^k normalization: shift the support to start at exponent 0 and make
/// the constant term positive.
LaurentPoly normalize_alexander(const LaurentPoly& p);

} // namespace rq
