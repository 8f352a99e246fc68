#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rq/errors.hpp"

namespace rq {

/// Witnesses for failures of the rack axioms in an operation table.
struct RackReport {
    struct RowCollision {
        int x, y1, y2; // x |> y1 == x |> y2 with y1 != y2
    };
    struct DistributivityWitness {
        int x, y, z; // x |> (y |> z) != (x |> y) |> (x |> z)
    };
    std::vector<RowCollision> collisions;
    std::vector<DistributivityWitness> distributivity;

    bool ok() const { return collisions.empty() && distributivity.empty(); }
};

struct QuandleReport {
    std::vector<int> non_idempotent; // all i with i |> i != i
    bool ok() const { return non_idempotent.empty(); }
};

struct ElementFlags {
    bool is_fixed = false;     // x |> i == i for all x
    bool is_fixing = false;    // i |> y == y for all y
    bool is_unit = false;      // fixed and fixing
    bool is_pointable = false; // i |> i == i
};

/// A finite rack presented by its operation table. Rows index the acting
/// element: table[x][y] = x |> y. Tables that fail the axioms are accepted
/// and flagged so that the reports can expose witnesses.
class FiniteRack {
public:
    explicit FiniteRack(std::vector<std::vector<int>> table,
                        std::optional<int> basepoint = std::nullopt,
                        std::vector<std::string> names = {});

    static FiniteRack trivial(int n);
    static FiniteRack dihedral(int n); // i |> j = 2i - j mod n
    /// Permutation rack x |> y = f(y); a quandle only when f = id.
    static FiniteRack permutation_rack(const std::vector<int>& f);
    /// The closure of the given permutations under composition, with
    /// operation g |> h = g h g^-1. Elements are named in cycle notation.
    static FiniteRack conjugation_quandle(const std::vector<std::vector<int>>& generating_perms);

    int size() const { return n_; }
    int op(int x, int y) const { return table_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
    /// The unique c with x |> c = y. Requires row bijectivity.
    int op_inverse(int x, int y) const;

    bool is_rack() const { return rack_report_.ok(); }
    bool is_quandle() const { return rack_report_.ok() && quandle_report_.ok(); }
    const RackReport& rack_report() const { return rack_report_; }
    const QuandleReport& quandle_report() const { return quandle_report_; }

    /// The map r -> r |> r, checked to be a rack automorphism.
    std::vector<int> canonical_automorphism() const;

    ElementFlags flags(int i) const;

    std::optional<int> basepoint() const { return basepoint_; }
    const std::vector<std::string>& names() const { return names_; }
    std::string element_name(int i) const;
    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> inverse_rows_; // filled when rows are bijective
    std::optional<int> basepoint_;
    std::vector<std::string> names_;
    RackReport rack_report_;
    QuandleReport quandle_report_;
};

/// Axiom checks on a raw table; throws InputError on malformed input
/// (non-square, entries out of range).
RackReport check_rack(const std::vector<std::vector<int>>& table);
QuandleReport check_quandle(const std::vector<std::vector<int>>& table);

} // namespace rq
