#pragma once

#include <vector>

#include "rq/bigint.hpp"
#include "rq/errors.hpp"

namespace rq {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const Int& at(int i, int j) const { return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }

    bool is_zero() const;
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    IntegerMatrix transposed() const;

    /// Exact determinant (Bareiss fraction-free elimination); square only.
    Int determinant() const;
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/// u * m * v = d with d diagonal, d_i | d_{i+1}, d_i >= 0, and u, v unimodular.
/// v_inverse tracks v^{-1} so kernel coordinates stay cheap to extract.
struct SmithForm {
    IntegerMatrix d, u, v, v_inverse;
    int rank = 0;                 // number of nonzero diagonal entries
    std::vector<Int> divisors() const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

struct AbelianGroupInfo {
    int rank = 0;                 // free rank
    std::vector<Int> torsion;     // nontrivial divisors d > 1, in divisibility order
    friend bool operator==(const AbelianGroupInfo&, const AbelianGroupInfo&) = default;
};

/// Z^cols / (row space of m), read from the Smith form.
AbelianGroupInfo cokernel(const IntegerMatrix& m);

} // namespace rq
