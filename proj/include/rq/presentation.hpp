#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rq/finite_rack.hpp"
#include "rq/integer_matrix.hpp"
#include "rq/words.hpp"

namespace rq {

/// x_lhs |> x_arg = x_result (sign +1) or x_lhs |>^-1 x_arg = x_result (sign -1).
struct QuandleRelation {
    int lhs = 0, arg = 0, result = 0;
    int sign = +1;
    friend bool operator==(const QuandleRelation&, const QuandleRelation&) = default;
};

struct QuandlePresentation {
    std::vector<std::string> generators;
    std::vector<QuandleRelation> relations;

    void validate() const; // at least one generator, indices in range, sign +-1
};

/// One crossing in arc terms: the over arc acts on the incoming under arc and
/// produces the outgoing under arc.
struct Crossing {
    int over = 0, under_in = 0, under_out = 0;
    int sign = +1;
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct KnotDiagram {
    int arc_count = 0;
    std::vector<Crossing> crossings;
    friend bool operator==(const KnotDiagram&, const KnotDiagram&) = default;
};

/// Checks classical-knot arc bookkeeping: every arc is the incoming under arc
/// of exactly one crossing and the outgoing under arc of exactly one crossing,
/// and following under_in -> under_out walks through all arcs in one cycle.
void validate_diagram(const KnotDiagram& d);

/// PD text `X(a,b,c,d) ...` with edges numbered 1..2n along the knot.
/// Slots list the edges counterclockwise from the incoming under edge a, so
/// the outgoing under edge is c and the over strand occupies b and d; the
/// crossing sign is +1 when d is the over strand's incoming edge and -1 when
/// b is (decided by which of b, d the other follows along the knot).
KnotDiagram import_pd(std::string_view text);
std::string export_pd(const KnotDiagram& d);

/// One generator per arc, one relation per crossing:
/// over |>^sign under_in = under_out.
QuandlePresentation wirtinger(const KnotDiagram& d);

/// Built-in diagrams: "unknot", "3_1", "4_1".
KnotDiagram knot_fixture(std::string_view name);

/// Number of quandle homomorphisms presentation -> target, by backtracking
/// over generator assignments with forced-value propagation. The target must
/// be a quandle.
long long count_colorings(const QuandlePresentation& p, const FiniteRack& target);

struct GroupPresentation {
    Alphabet generators;
    std::vector<ReducedWord> relators;
};

/// Replaces x |> y = z by the group relator x y x^-1 z^-1
/// (inverse operation: x^-1 y x z^-1).
GroupPresentation associated_group(const QuandlePresentation& p);

/// Smith normal form of the relator exponent-sum matrix.
AbelianGroupInfo group_abelianization(const GroupPresentation& g);

} // namespace rq
