#pragma once

#include <optional>
#include <vector>

#include "rq/finite_rack.hpp"

namespace rq {

/// An abelian group Z/m_1 + ... + Z/m_k with endomorphisms A and E making
/// x |> y = E(x) + A(y) a rack structure: A invertible and E^2 = E(1 - A).
/// Elements are residue vectors; matrices act by column convention.
struct AbelianRackModule {
    std::vector<int> moduli;            // each >= 1
    std::vector<std::vector<int>> a;    // k x k
    std::vector<std::vector<int>> e;    // k x k

    int rank() const { return static_cast<int>(moduli.size()); }
    long long carrier_size() const;

    /// Checks well-definedness of A and E mod the moduli, invertibility of A
    /// on the carrier, and the relation E o E = E o (id - A).
    /// Returns an explanation on failure.
    std::optional<std::string> validate(long long max_carrier = 1 << 20) const;

    std::vector<int> apply(const std::vector<std::vector<int>>& m,
                           const std::vector<int>& x) const;
    std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) const;

    std::vector<int> element_of_index(long long idx) const;
    long long index_of_element(const std::vector<int>& x) const;

    /// Convenience for a single cyclic summand Z/m.
    static AbelianRackModule cyclic(int m, int a_scalar, int e_scalar);
};

/// Operation table x |> y = E(x) + A(y) over the whole carrier.
/// Throws InputError if the module is invalid, CapacityError past the bound.
FiniteRack module_to_rack(const AbelianRackModule& m, long long max_carrier = 1 << 20);

/// Reads candidate endomorphisms A(y) = 0 |> y and E(x) = x |> 0 off the
/// table, with the carrier identified with the given cyclic decomposition in
/// mixed-radix index order, and accepts iff x |> y = E(x) + A(y) throughout
/// and the module invariants hold. Defaults to a single cyclic group Z/n.
std::optional<AbelianRackModule> rack_to_module_check(const FiniteRack& r,
                                                      std::vector<int> moduli = {});

} // namespace rq
