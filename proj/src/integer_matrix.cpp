#include "rq/integer_matrix.hpp"

#include <algorithm>
#include <utility>

namespace rq {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Int IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    IntegerMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev; // exact in Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

namespace {

struct SnfWork {
    IntegerMatrix d, u, v, vinv;

    void row_swap(int i, int j) {
        for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void row_add(int i, int j, const Int& f) { // row i += f * row j
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) += f * d.at(j, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) += f * u.at(j, c);
    }
    void row_negate(int i) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    void col_add(int i, int j, const Int& f) { // col i += f * col j
        for (int r = 0; r < d.rows(); ++r) d.at(r, i) += f * d.at(r, j);
        for (int r = 0; r < v.rows(); ++r) v.at(r, i) += f * v.at(r, j);
        for (int c = 0; c < vinv.cols(); ++c) vinv.at(j, c) -= f * vinv.at(i, c);
    }
    void col_negate(int i) {
        for (int r = 0; r < d.rows(); ++r) d.at(r, i) = -d.at(r, i);
        for (int r = 0; r < v.rows(); ++r) v.at(r, i) = -v.at(r, i);
        for (int c = 0; c < vinv.cols(); ++c) vinv.at(i, c) = -vinv.at(i, c);
    }
};

// quotient rounded toward the nearest integer keeps the remainders small
Int rounded_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (abs_int(r) * 2 > abs_int(b)) q += (a < 0) == (b < 0) ? 1 : -1;
    return q;
}

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    SnfWork w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()),
              IntegerMatrix::identity(m.cols())};
    const int bound = std::min(m.rows(), m.cols());
    int t = 0;
    for (; t < bound; ++t) {
        // pivot: entry of least absolute value in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < w.d.rows(); ++i)
            for (int j = t; j < w.d.cols(); ++j) {
                if (w.d.at(i, j) == 0) continue;
                if (pi < 0 || abs_int(w.d.at(i, j)) < abs_int(w.d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // remaining block is zero
        if (pi != t) w.row_swap(pi, t);
        if (pj != t) w.col_swap(pj, t);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < w.d.rows(); ++i) {
                if (w.d.at(i, t) == 0) continue;
                Int q = rounded_quotient(w.d.at(i, t), w.d.at(t, t));
                if (q != 0) w.row_add(i, t, -q);
                if (w.d.at(i, t) != 0) { // smaller remainder becomes the pivot
                    w.row_swap(i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < w.d.cols(); ++j) {
                if (w.d.at(t, j) == 0) continue;
                Int q = rounded_quotient(w.d.at(t, j), w.d.at(t, t));
                if (q != 0) w.col_add(j, t, -q);
                if (w.d.at(t, j) != 0) {
                    w.col_swap(j, t);
                    clean = false;
                }
            }
            if (!clean) continue;

            // divisibility d_t | everything below-right; else pull the
            // offending column in and keep reducing
            bool divisible = true;
            for (int i = t + 1; i < w.d.rows() && divisible; ++i)
                for (int j = t + 1; j < w.d.cols() && divisible; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.col_add(t, j, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);
    }

    SmithForm out{std::move(w.d), std::move(w.u), std::move(w.v), std::move(w.vinv), t};
    return out;
}

std::vector<Int> SmithForm::divisors() const {
    std::vector<Int> out;
    for (int i = 0; i < rank; ++i) out.push_back(d.at(i, i));
    return out;
}

AbelianGroupInfo cokernel(const IntegerMatrix& m) {
    SmithForm snf = smith_normal_form(m);
    AbelianGroupInfo g;
    g.rank = m.cols() - snf.rank;
    for (const Int& d : snf.divisors())
        if (d > 1) g.torsion.push_back(d);
    return g;
}

} // namespace rq
