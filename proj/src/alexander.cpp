#include "rq/alexander.hpp"

namespace rq {

LaurentMatrix LaurentMatrix::without_row_col(int row, int col) const {
    LaurentMatrix m(rows_ - (row >= 0 ? 1 : 0), cols_ - (col >= 0 ? 1 : 0));
    int ti = 0;
    for (int i = 0; i < rows_; ++i) {
        if (i == row) continue;
        int tj = 0;
        for (int j = 0; j < cols_; ++j) {
            if (j == col) continue;
            m.at(ti, tj) = at(i, j);
            ++tj;
        }
        ++ti;
    }
    return m;
}

LaurentPoly LaurentMatrix::determinant() const {
    if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0) return LaurentPoly::constant(1);
    LaurentMatrix m = *this;
    LaurentPoly prev = LaurentPoly::constant(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return LaurentPoly();
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.is_zero() ? LaurentPoly() : exact_div(num, prev);
            }
        prev = m.at(k, k);
    }
    LaurentPoly det = m.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

LaurentMatrix alexander_matrix(const QuandlePresentation& p) {
    p.validate();
    LaurentMatrix m(static_cast<int>(p.relations.size()), static_cast<int>(p.generators.size()));
    const LaurentPoly a = LaurentPoly::variable();
    const LaurentPoly a_inv = LaurentPoly::monomial(-1, 1);
    for (int r = 0; r < m.rows(); ++r) {
        const QuandleRelation& rel = p.relations[static_cast<size_t>(r)];
        if (rel.sign > 0) {
            // x_i |> x_j = x_k: (1-A) e_i + A e_j - e_k
            m.at(r, rel.lhs) += one_minus_a();
            m.at(r, rel.arg) += a;
            m.at(r, rel.result) -= LaurentPoly::constant(1);
        } else {
            // x_i |>^-1 x_j = x_k, i.e. x_k = A^-1(x_j - (1-A) x_i)
            m.at(r, rel.lhs) += a_inv * one_minus_a();
            m.at(r, rel.arg) -= a_inv;
            m.at(r, rel.result) += LaurentPoly::constant(1);
        }
    }
    return m;
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly shifted = LaurentPoly::monomial(-p.min_exponent(), 1) * p;
    return shifted.coeff(0) < 0 ? -shifted : shifted;
}

AlexanderResult alexander_polynomial(const LaurentMatrix& m, int deleted_row) {
    // a knot presentation carries one redundant relation
    if (m.rows() != m.cols() && m.rows() != m.cols() - 1)
        throw InputError("Alexander matrix must be n x n or (n-1) x n");
    const bool drop_row = m.rows() == m.cols();
    if (drop_row && deleted_row < 0) deleted_row = m.rows() - 1;
    if (drop_row && deleted_row >= m.rows()) throw InputError("deleted row out of range");
    LaurentMatrix minor = m.without_row_col(drop_row ? deleted_row : -1, m.cols() - 1);
    LaurentPoly det = minor.determinant();
    AlexanderResult res;
    res.degenerate = det.is_zero() && m.cols() > 1;
    res.polynomial = normalize_alexander(det);
    return res;
}

} // namespace rq
