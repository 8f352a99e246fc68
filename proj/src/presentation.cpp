#include "rq/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace rq {

void QuandlePresentation::validate() const {
    if (generators.empty()) throw InputError("presentation needs at least one generator");
    const int n = static_cast<int>(generators.size());
    for (const QuandleRelation& r : relations) {
        if (r.lhs < 0 || r.lhs >= n || r.arg < 0 || r.arg >= n || r.result < 0 || r.result >= n)
            throw InputError("relation index out of range");
        if (r.sign != 1 && r.sign != -1) throw InputError("relation sign must be +1 or -1");
    }
}

void validate_diagram(const KnotDiagram& d) {
    if (d.arc_count < 1) throw InputError("diagram needs at least one arc");
    if (!d.crossings.empty() && static_cast<int>(d.crossings.size()) != d.arc_count)
        throw InputError("a classical knot diagram has as many arcs as crossings");
    std::vector<int> in_count(static_cast<size_t>(d.arc_count), 0);
    std::vector<int> out_count(static_cast<size_t>(d.arc_count), 0);
    std::vector<int> successor(static_cast<size_t>(d.arc_count), -1);
    for (const Crossing& c : d.crossings) {
        for (int a : {c.over, c.under_in, c.under_out})
            if (a < 0 || a >= d.arc_count) throw InputError("crossing arc index out of range");
        if (c.sign != 1 && c.sign != -1) throw InputError("crossing sign must be +1 or -1");
        ++in_count[static_cast<size_t>(c.under_in)];
        ++out_count[static_cast<size_t>(c.under_out)];
        successor[static_cast<size_t>(c.under_in)] = c.under_out;
    }
    if (!d.crossings.empty()) {
        for (int a = 0; a < d.arc_count; ++a) {
            if (in_count[static_cast<size_t>(a)] != 1)
                throw InputError("arc " + std::to_string(a) +
                                 " is the incoming under arc of " +
                                 std::to_string(in_count[static_cast<size_t>(a)]) + " crossings");
            if (out_count[static_cast<size_t>(a)] != 1)
                throw InputError("arc " + std::to_string(a) +
                                 " is the outgoing under arc of " +
                                 std::to_string(out_count[static_cast<size_t>(a)]) + " crossings");
        }
        // single component: the under walk visits every arc
        int a = 0, steps = 0;
        do {
            a = successor[static_cast<size_t>(a)];
            ++steps;
        } while (a != 0 && steps <= d.arc_count);
        if (steps != d.arc_count)
            throw InputError("under walk does not close up through all arcs (arc " +
                             std::to_string(a) + "); diagram is not a single knot");
    }
}

namespace {

struct PdCrossing {
    int slot[4]; // a, b, c, d
};

std::vector<PdCrossing> parse_pd_text(std::string_view text) {
    std::vector<PdCrossing> out;
    size_t i = 0;
    const size_t n = text.size();
    auto err = [&](const std::string& what) -> InputError {
        return InputError("PD parse error at position " + std::to_string(i) + ": " + what);
    };
    auto skip = [&] {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                         text[i] == ';'))
            ++i;
    };
    skip();
    if (i == n) throw err("empty input");
    while (i < n) {
        if (text[i] != 'X' && text[i] != 'x') throw err("expected 'X'");
        ++i;
        if (i >= n || (text[i] != '(' && text[i] != '[')) throw err("expected '(' after 'X'");
        const char close = text[i] == '(' ? ')' : ']';
        ++i;
        PdCrossing c{};
        for (int s = 0; s < 4; ++s) {
            skip();
            size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw err("expected edge number");
            c.slot[s] = std::stoi(std::string(text.substr(start, i - start)));
            skip();
            if (s < 3) {
                if (i >= n || text[i] != ',') throw err("expected ','");
                ++i;
            }
        }
        if (i >= n || text[i] != close) throw err("expected closing bracket");
        ++i;
        out.push_back(c);
        skip();
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); }
};

} // namespace

KnotDiagram import_pd(std::string_view text) {
    const std::vector<PdCrossing> pd = parse_pd_text(text);
    const int n = static_cast<int>(pd.size());
    const int edges = 2 * n;
    std::vector<int> uses(static_cast<size_t>(edges) + 1, 0);
    for (const PdCrossing& c : pd)
        for (int s = 0; s < 4; ++s) {
            if (c.slot[s] < 1 || c.slot[s] > edges)
                throw InputError("edge label " + std::to_string(c.slot[s]) +
                                 " outside 1.." + std::to_string(edges));
            ++uses[static_cast<size_t>(c.slot[s])];
        }
    for (int e = 1; e <= edges; ++e)
        if (uses[static_cast<size_t>(e)] != 2)
            throw InputError("edge " + std::to_string(e) + " appears " +
                             std::to_string(uses[static_cast<size_t>(e)]) + " times, expected 2");

    auto next_edge = [edges](int e) { return e % edges + 1; };

    UnionFind arcs(edges + 1);
    std::vector<int> signs;
    for (const PdCrossing& c : pd) {
        const int a = c.slot[0], b = c.slot[1], out = c.slot[2], d = c.slot[3];
        if (out != next_edge(a))
            throw InputError("crossing X(" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(out) + "," + std::to_string(d) +
                             "): under-out slot must follow the under-in edge along the knot");
        // the over strand is not broken at the crossing: its two edges form one arc
        arcs.unite(b, d);
        if (b == next_edge(d))
            signs.push_back(+1); // d is the incoming over edge
        else if (d == next_edge(b))
            signs.push_back(-1);
        else
            throw InputError("crossing X(" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(out) + "," + std::to_string(d) +
                             "): over slots b, d are not consecutive edges");
    }

    // arc ids ordered by the least edge they contain
    std::map<int, int> root_to_arc;
    {
        std::vector<std::pair<int, int>> mins; // (least edge, root)
        std::map<int, int> least;
        for (int e = 1; e <= edges; ++e) {
            int r = arcs.find(e);
            if (!least.count(r)) least[r] = e;
        }
        for (auto& [r, e] : least) mins.push_back({e, r});
        std::sort(mins.begin(), mins.end());
        for (size_t k = 0; k < mins.size(); ++k) root_to_arc[mins[k].second] = static_cast<int>(k);
    }

    KnotDiagram dgm;
    dgm.arc_count = static_cast<int>(root_to_arc.size());
    for (int k = 0; k < n; ++k) {
        const PdCrossing& c = pd[static_cast<size_t>(k)];
        Crossing cr;
        cr.over = root_to_arc.at(arcs.find(c.slot[1]));
        cr.under_in = root_to_arc.at(arcs.find(c.slot[0]));
        cr.under_out = root_to_arc.at(arcs.find(c.slot[2]));
        cr.sign = signs[static_cast<size_t>(k)];
        dgm.crossings.push_back(cr);
    }
    validate_diagram(dgm);
    return dgm;
}

std::string export_pd(const KnotDiagram& d) {
    validate_diagram(d);
    if (d.crossings.empty()) throw InputError("cannot export a crossingless diagram as PD text");
    const int n = static_cast<int>(d.crossings.size());

    std::vector<int> crossing_of_under_in(static_cast<size_t>(d.arc_count), -1);
    std::vector<std::vector<int>> overpasses(static_cast<size_t>(d.arc_count));
    for (int k = 0; k < n; ++k) {
        crossing_of_under_in[static_cast<size_t>(d.crossings[static_cast<size_t>(k)].under_in)] = k;
        overpasses[static_cast<size_t>(d.crossings[static_cast<size_t>(k)].over)].push_back(k);
    }

    // walk the knot from arc 0, assigning edge labels; an arc's overpass
    // order is not recorded in the diagram, so any fixed order reimports to
    // the same diagram
    struct OverEdges {
        int in = 0, out = 0;
    };
    std::vector<OverEdges> over_edges(static_cast<size_t>(n));
    std::vector<int> under_in_edge(static_cast<size_t>(n), 0);
    const int edges = 2 * n;
    int edge = 1, arc = 0;
    for (int step = 0; step < d.arc_count; ++step) {
        for (int k : overpasses[static_cast<size_t>(arc)]) {
            over_edges[static_cast<size_t>(k)].in = edge;
            over_edges[static_cast<size_t>(k)].out = edge % edges + 1;
            ++edge;
        }
        const int k = crossing_of_under_in[static_cast<size_t>(arc)];
        under_in_edge[static_cast<size_t>(k)] = edge;
        ++edge;
        arc = d.crossings[static_cast<size_t>(k)].under_out;
    }

    std::ostringstream os;
    for (int k = 0; k < n; ++k) {
        const int a = under_in_edge[static_cast<size_t>(k)];
        const int c = a % edges + 1;
        const int b = d.crossings[static_cast<size_t>(k)].sign > 0
                          ? over_edges[static_cast<size_t>(k)].out
                          : over_edges[static_cast<size_t>(k)].in;
        const int dd = d.crossings[static_cast<size_t>(k)].sign > 0
                           ? over_edges[static_cast<size_t>(k)].in
                           : over_edges[static_cast<size_t>(k)].out;
        if (k) os << ' ';
        os << "X(" << a << ',' << b << ',' << c << ',' << dd << ')';
    }
    return os.str();
}

QuandlePresentation wirtinger(const KnotDiagram& d) {
    validate_diagram(d);
    QuandlePresentation p;
    for (int a = 0; a < d.arc_count; ++a) p.generators.push_back("x" + std::to_string(a + 1));
    for (const Crossing& c : d.crossings)
        p.relations.push_back({c.over, c.under_in, c.under_out, c.sign});
    p.validate();
    return p;
}

KnotDiagram knot_fixture(std::string_view name) {
    if (name == "unknot") {
        KnotDiagram d;
        d.arc_count = 1;
        return d;
    }
    if (name == "3_1") // all-positive trefoil
        return import_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
    if (name == "4_1") // figure eight, two positive and two negative crossings
        return import_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
    throw InputError("unknown knot fixture '" + std::string(name) +
                     "' (expected unknot, 3_1, 4_1)");
}

namespace {

struct ColoringSearch {
    const FiniteRack& target;
    std::vector<QuandleRelation> triples; // normalized to sign +1
    std::vector<std::vector<int>> relations_of;
    std::vector<int> order;
    long long count = 0;

    // returns false on contradiction
    bool propagate(std::vector<int>& val, std::vector<int> dirty) {
        while (!dirty.empty()) {
            const int g = dirty.back();
            dirty.pop_back();
            for (int ri : relations_of[static_cast<size_t>(g)]) {
                const QuandleRelation& r = triples[static_cast<size_t>(ri)];
                const int vi = val[static_cast<size_t>(r.lhs)];
                const int vj = val[static_cast<size_t>(r.arg)];
                const int vk = val[static_cast<size_t>(r.result)];
                if (vi >= 0 && vj >= 0) {
                    const int forced = target.op(vi, vj);
                    if (vk < 0) {
                        val[static_cast<size_t>(r.result)] = forced;
                        dirty.push_back(r.result);
                    } else if (vk != forced) {
                        return false;
                    }
                }
                if (vi >= 0 && vk >= 0) {
                    const int forced = target.op_inverse(vi, vk);
                    if (vj < 0) {
                        val[static_cast<size_t>(r.arg)] = forced;
                        dirty.push_back(r.arg);
                    } else if (vj != forced) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void search(std::vector<int>& val, size_t next) {
        while (next < order.size() && val[static_cast<size_t>(order[next])] >= 0) ++next;
        if (next == order.size()) {
            ++count;
            return;
        }
        const int g = order[next];
        for (int v = 0; v < target.size(); ++v) {
            std::vector<int> trial = val;
            trial[static_cast<size_t>(g)] = v;
            if (propagate(trial, {g})) search(trial, next + 1);
        }
    }
};

} // namespace

long long count_colorings(const QuandlePresentation& p, const FiniteRack& target) {
    p.validate();
    if (!target.is_quandle())
        throw InputError("coloring target must be a valid quandle");

    ColoringSearch s{target, {}, {}, {}, 0};
    for (const QuandleRelation& r : p.relations)
        // x |>^-1 y = z is x |> z = y
        s.triples.push_back(r.sign > 0 ? r : QuandleRelation{r.lhs, r.result, r.arg, +1});

    const int n = static_cast<int>(p.generators.size());
    s.relations_of.assign(static_cast<size_t>(n), {});
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (size_t ri = 0; ri < s.triples.size(); ++ri)
        for (int g : {s.triples[ri].lhs, s.triples[ri].arg, s.triples[ri].result}) {
            s.relations_of[static_cast<size_t>(g)].push_back(static_cast<int>(ri));
            ++degree[static_cast<size_t>(g)];
        }
    s.order.resize(static_cast<size_t>(n));
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return degree[static_cast<size_t>(a)] > degree[static_cast<size_t>(b)]; });

    std::vector<int> val(static_cast<size_t>(n), -1);
    s.search(val, 0);
    return s.count;
}

GroupPresentation associated_group(const QuandlePresentation& p) {
    p.validate();
    GroupPresentation g;
    g.generators = Alphabet(p.generators);
    for (const QuandleRelation& r : p.relations) {
        std::vector<Letter> w = {Letter{r.lhs, r.sign}, Letter{r.arg, +1}, Letter{r.lhs, -r.sign},
                                 Letter{r.result, -1}};
        g.relators.push_back(ReducedWord::reduce(g.generators, w));
    }
    return g;
}

AbelianGroupInfo group_abelianization(const GroupPresentation& g) {
    IntegerMatrix m(static_cast<int>(g.relators.size()), g.generators.size());
    for (int i = 0; i < m.rows(); ++i)
        for (const Letter& l : g.relators[static_cast<size_t>(i)].letters())
            m.at(i, l.gen) += l.exp;
    return cokernel(m);
}

} // namespace rq
