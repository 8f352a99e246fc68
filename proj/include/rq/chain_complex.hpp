#pragma once

#include <vector>

#include "rq/finite_rack.hpp"
#include "rq/integer_matrix.hpp"

namespace rq {

struct HomologyGroup {
    int betti = 0;
    std::vector<Int> torsion; // divisors > 1 in divisibility order
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
    std::string str() const; // "Z^r + Z/d + ..." ("0" when trivial)
};

/// Chain complex of a finite rack: C_0 = Z, C_n free on the degree-n basis
/// tuples, with
///   d(x_1..x_n) = sum_{i=2..n} (-1)^i [ (x_1..x_{i-1} deleted x_i x_{i+1}..x_n)
///                                      - (x_i|>x_1, .., x_i|>x_{i-1}, x_{i+1}, .., x_n) ]
/// The quandle variant works on the quotient by tuples with an adjacent
/// repeat. d o d = 0 is checked at construction.
class ChainComplex {
public:
    int max_degree() const { return static_cast<int>(bases_.size()) - 1; }
    int rank(int n) const;
    const std::vector<std::vector<int>>& basis(int n) const; // degree >= 1
    const IntegerMatrix& boundary(int n) const;              // d_n : C_n -> C_{n-1}

    /// H_n = ker d_n / im d_{n+1}; needs n < max_degree().
    HomologyGroup homology(int n) const;

    /// Sum over 0..max_degree of (-1)^n rank C_n and of (-1)^n betti H_n.
    /// The identity between them holds when boundaries vanish outside the
    /// computed range.
    long long euler_characteristic_chains() const;

private:
    friend ChainComplex rack_chain_complex(const FiniteRack&, int, long long);
    friend ChainComplex quandle_chain_complex(const FiniteRack&, int, long long);

    std::vector<std::vector<std::vector<int>>> bases_; // bases_[n] = degree-n tuples (n >= 1)
    std::vector<IntegerMatrix> boundaries_;            // boundaries_[n] = d_n (index 0 unused)
};

ChainComplex rack_chain_complex(const FiniteRack& r, int max_degree,
                                long long max_basis = 1000000);
/// Requires a quandle; the degenerate tuples only form a subcomplex then.
ChainComplex quandle_chain_complex(const FiniteRack& r, int max_degree,
                                   long long max_basis = 1000000);

/// Plain triplet text: one `d <n> <rows> <cols>` header per boundary map
/// followed by `i j value` lines for the nonzero entries.
std::string export_boundaries_triplets(const ChainComplex& c);

} // namespace rq
