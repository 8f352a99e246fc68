#pragma once

#include <map>
#include <string>
#include <string_view>

#include "rq/bigint.hpp"
#include "rq/errors.hpp"

namespace rq {

/// Element of Z[A, A^-1]: a finitely supported exponent -> coefficient map
/// holding no zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default; // zero

    static LaurentPoly constant(Int c);
    static LaurentPoly variable();                 // A
    static LaurentPoly monomial(int exp, Int c);   // c * A^exp

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int exp) const;
    int min_exponent() const; // throws on zero
    int max_exponent() const;

    /// The augmentation A -> 1 (sum of coefficients).
    Int eval_at_one() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// "1 - A + A^2"; zero prints as "0"; negative exponents as A^-1.
    std::string str() const;
    static LaurentPoly parse(std::string_view text);

private:
    void insert(int exp, Int c);
    std::map<int, Int> terms_;
};

inline LaurentPoly one_minus_a() {
    return LaurentPoly::constant(1) - LaurentPoly::variable();
}

/// Synthetic division by (1 - A); throws InputError unless p(1) = 0.
LaurentPoly divide_by_one_minus_a(const LaurentPoly& p);

/// Exact division in Z[A, A^-1]; throws if the quotient does not exist.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

} // namespace rq
