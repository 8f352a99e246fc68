#include "rq/finite_rack.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rq {

namespace {

void require_well_formed(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("operation table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw InputError("table entry out of range");
    }
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[static_cast<size_t>(g[i])];
    return h;
}

std::vector<int> invert_perm(const std::vector<int>& f) {
    std::vector<int> inv(f.size());
    for (size_t i = 0; i < f.size(); ++i) inv[static_cast<size_t>(f[i])] = static_cast<int>(i);
    return inv;
}

bool is_permutation(const std::vector<int>& f) {
    std::vector<char> seen(f.size(), 0);
    for (int v : f) {
        if (v < 0 || v >= static_cast<int>(f.size()) || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

std::string cycle_notation(const std::vector<int>& p) {
    std::ostringstream os;
    std::vector<char> seen(p.size(), 0);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        os << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) os << ' ';
            os << j;
            first = false;
            j = static_cast<size_t>(p[j]);
        }
        os << ')';
    }
    return any ? os.str() : "e";
}

} // namespace

RackReport check_rack(const std::vector<std::vector<int>>& table) {
    require_well_formed(table);
    const int n = static_cast<int>(table.size());
    RackReport report;
    for (int x = 0; x < n; ++x) {
        std::vector<int> where(static_cast<size_t>(n), -1);
        for (int y = 0; y < n; ++y) {
            int v = table[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (where[static_cast<size_t>(v)] >= 0)
                report.collisions.push_back({x, where[static_cast<size_t>(v)], y});
            else
                where[static_cast<size_t>(v)] = y;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = table[static_cast<size_t>(x)]
                               [static_cast<size_t>(table[static_cast<size_t>(y)][static_cast<size_t>(z)])];
                int rhs = table[static_cast<size_t>(table[static_cast<size_t>(x)][static_cast<size_t>(y)])]
                               [static_cast<size_t>(table[static_cast<size_t>(x)][static_cast<size_t>(z)])];
                if (lhs != rhs) report.distributivity.push_back({x, y, z});
            }
    return report;
}

QuandleReport check_quandle(const std::vector<std::vector<int>>& table) {
    require_well_formed(table);
    QuandleReport report;
    for (int i = 0; i < static_cast<int>(table.size()); ++i)
        if (table[static_cast<size_t>(i)][static_cast<size_t>(i)] != i)
            report.non_idempotent.push_back(i);
    return report;
}

FiniteRack::FiniteRack(std::vector<std::vector<int>> table, std::optional<int> basepoint,
                       std::vector<std::string> names)
    : n_(static_cast<int>(table.size())), table_(std::move(table)), basepoint_(basepoint),
      names_(std::move(names)) {
    rack_report_ = check_rack(table_);
    quandle_report_ = check_quandle(table_);
    if (!names_.empty() && static_cast<int>(names_.size()) != n_)
        throw InputError("element name list has wrong length");
    if (basepoint_) {
        if (*basepoint_ < 0 || *basepoint_ >= n_)
            throw InputError("basepoint index out of range");
        if (op(*basepoint_, *basepoint_) != *basepoint_)
            throw InputError("basepoint p violates p |> p = p");
    }
    if (rack_report_.collisions.empty()) {
        inverse_rows_.assign(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                inverse_rows_[static_cast<size_t>(x)][static_cast<size_t>(op(x, y))] = y;
    }
}

int FiniteRack::op_inverse(int x, int y) const {
    if (inverse_rows_.empty())
        throw InputError("op_inverse on a table with non-bijective rows");
    return inverse_rows_[static_cast<size_t>(x)][static_cast<size_t>(y)];
}

std::vector<int> FiniteRack::canonical_automorphism() const {
    if (!is_rack()) throw InputError("canonical automorphism requires a valid rack");
    std::vector<int> phi(static_cast<size_t>(n_));
    for (int r = 0; r < n_; ++r) phi[static_cast<size_t>(r)] = op(r, r);
    // A valid table failing this indicates a transcription bug, not bad input.
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (phi[static_cast<size_t>(op(x, y))] !=
                op(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)]))
                throw std::logic_error("canonical map r -> r |> r is not an automorphism");
    return phi;
}

ElementFlags FiniteRack::flags(int i) const {
    if (i < 0 || i >= n_) throw InputError("element index out of range");
    ElementFlags f;
    f.is_fixed = true;
    f.is_fixing = true;
    for (int x = 0; x < n_; ++x) {
        if (op(x, i) != i) f.is_fixed = false;
        if (op(i, x) != x) f.is_fixing = false;
    }
    f.is_unit = f.is_fixed && f.is_fixing;
    f.is_pointable = op(i, i) == i;
    return f;
}

std::string FiniteRack::element_name(int i) const {
    if (!names_.empty()) return names_[static_cast<size_t>(i)];
    return std::to_string(i);
}

FiniteRack FiniteRack::trivial(int n) {
    if (n < 1) throw InputError("rack size must be >= 1");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<size_t>(x)][static_cast<size_t>(y)] = y;
    return FiniteRack(std::move(t));
}

FiniteRack FiniteRack::dihedral(int n) {
    if (n < 1) throw InputError("rack size must be >= 1");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = ((2 * x - y) % n + n) % n;
    return FiniteRack(std::move(t));
}

FiniteRack FiniteRack::permutation_rack(const std::vector<int>& f) {
    if (f.empty() || !is_permutation(f)) throw InputError("not a permutation");
    const int n = static_cast<int>(f.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<size_t>(x)][static_cast<size_t>(y)] = f[static_cast<size_t>(y)];
    return FiniteRack(std::move(t));
}

FiniteRack FiniteRack::conjugation_quandle(const std::vector<std::vector<int>>& generating_perms) {
    if (generating_perms.empty()) throw InputError("need at least one generating permutation");
    const size_t deg = generating_perms[0].size();
    for (const auto& g : generating_perms)
        if (g.size() != deg || !is_permutation(g))
            throw InputError("generators must be permutations of equal degree");

    std::vector<int> id(deg);
    for (size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);

    // closure under composition; std::map keeps the element order deterministic
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    index[id] = 0;
    elems.push_back(id);
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < elems.size(); ++i)
            for (const auto& g : generating_perms) {
                auto h = compose(elems[i], g);
                if (!index.count(h)) {
                    index[h] = -1;
                    elems.push_back(h);
                    grew = true;
                }
                if (elems.size() > 100000) throw CapacityError("permutation group too large");
            }
    }
    std::sort(elems.begin(), elems.end());
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::string> names;
    for (int x = 0; x < n; ++x) {
        auto xinv = invert_perm(elems[static_cast<size_t>(x)]);
        for (int y = 0; y < n; ++y) {
            auto conj = compose(compose(elems[static_cast<size_t>(x)], elems[static_cast<size_t>(y)]), xinv);
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = index.at(conj);
        }
        names.push_back(cycle_notation(elems[static_cast<size_t>(x)]));
    }
    return FiniteRack(std::move(t), std::nullopt, std::move(names));
}

} // namespace rq
