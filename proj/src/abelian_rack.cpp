#include "rq/abelian_rack.hpp"

#include <set>

namespace rq {

namespace {

int mod(int v, int m) { return (v % m + m) % m; }

} // namespace

long long AbelianRackModule::carrier_size() const {
    long long n = 1;
    for (int m : moduli) n *= m;
    return n;
}

std::vector<int> AbelianRackModule::apply(const std::vector<std::vector<int>>& m,
                                          const std::vector<int>& x) const {
    const int k = rank();
    std::vector<int> y(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        long long acc = 0;
        for (int j = 0; j < k; ++j)
            acc += static_cast<long long>(m[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
                   x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = mod(static_cast<int>(acc % moduli[static_cast<size_t>(i)]),
                                        moduli[static_cast<size_t>(i)]);
    }
    return y;
}

std::vector<int> AbelianRackModule::add(const std::vector<int>& x, const std::vector<int>& y) const {
    std::vector<int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        z[i] = mod(x[i] + y[i], moduli[i]);
    return z;
}

std::vector<int> AbelianRackModule::element_of_index(long long idx) const {
    std::vector<int> x(moduli.size());
    for (size_t i = moduli.size(); i-- > 0;) {
        x[i] = static_cast<int>(idx % moduli[i]);
        idx /= moduli[i];
    }
    return x;
}

long long AbelianRackModule::index_of_element(const std::vector<int>& x) const {
    long long idx = 0;
    for (size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + x[i];
    return idx;
}

std::optional<std::string> AbelianRackModule::validate(long long max_carrier) const {
    const int k = rank();
    if (k == 0) return "empty carrier";
    for (int m : moduli)
        if (m < 1) return "moduli must be >= 1";
    if (static_cast<int>(a.size()) != k || static_cast<int>(e.size()) != k)
        return "matrix size does not match the number of summands";
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != k) return "A is not square";
    for (const auto& row : e)
        if (static_cast<int>(row.size()) != k) return "E is not square";

    // well-definedness on Z/m_j generators: m_j * M[i][j] = 0 mod m_i
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            long long mj = moduli[static_cast<size_t>(j)];
            if ((mj * a[static_cast<size_t>(i)][static_cast<size_t>(j)]) % moduli[static_cast<size_t>(i)] != 0)
                return "A is not a well-defined endomorphism";
            if ((mj * e[static_cast<size_t>(i)][static_cast<size_t>(j)]) % moduli[static_cast<size_t>(i)] != 0)
                return "E is not a well-defined endomorphism";
        }

    const long long n = carrier_size();
    if (n > max_carrier) return "carrier exceeds the size bound";

    std::set<std::vector<int>> image;
    for (long long idx = 0; idx < n; ++idx)
        image.insert(apply(a, element_of_index(idx)));
    if (static_cast<long long>(image.size()) != n) return "A is not invertible on the carrier";

    for (long long idx = 0; idx < n; ++idx) {
        auto x = element_of_index(idx);
        auto lhs = apply(e, apply(e, x));
        auto ax = apply(a, x);
        std::vector<int> x_minus_ax(x.size());
        for (size_t i = 0; i < x.size(); ++i)
            x_minus_ax[i] = mod(x[i] - ax[i], moduli[i]);
        auto rhs = apply(e, x_minus_ax);
        if (lhs != rhs) return "relation E^2 = E(1 - A) fails";
    }
    return std::nullopt;
}

AbelianRackModule AbelianRackModule::cyclic(int m, int a_scalar, int e_scalar) {
    AbelianRackModule mod;
    mod.moduli = {m};
    mod.a = {{a_scalar}};
    mod.e = {{e_scalar}};
    return mod;
}

FiniteRack module_to_rack(const AbelianRackModule& m, long long max_carrier) {
    const long long n = m.carrier_size();
    if (n > max_carrier) throw CapacityError("carrier exceeds the size bound");
    if (auto err = m.validate(max_carrier)) throw InputError("invalid abelian rack module: " + *err);
    std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::vector<int>> ax(static_cast<size_t>(n)), ex(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        auto v = m.element_of_index(i);
        ax[static_cast<size_t>(i)] = m.apply(m.a, v);
        ex[static_cast<size_t>(i)] = m.apply(m.e, v);
    }
    for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y)
            table[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                static_cast<int>(m.index_of_element(m.add(ex[static_cast<size_t>(x)], ax[static_cast<size_t>(y)])));
    return FiniteRack(std::move(table));
}

std::optional<AbelianRackModule> rack_to_module_check(const FiniteRack& r, std::vector<int> moduli) {
    if (moduli.empty()) moduli = {r.size()};
    AbelianRackModule m;
    m.moduli = moduli;
    const int k = m.rank();
    if (m.carrier_size() != r.size()) return std::nullopt;

    // read column j of A from 0 |> e_j and of E from e_j |> 0
    m.a.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 0));
    m.e.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 0));
    for (int j = 0; j < k; ++j) {
        std::vector<int> gen(static_cast<size_t>(k), 0);
        gen[static_cast<size_t>(j)] = 1 % moduli[static_cast<size_t>(j)];
        long long gj = m.index_of_element(gen);
        auto a_col = m.element_of_index(r.op(0, static_cast<int>(gj)));
        auto e_col = m.element_of_index(r.op(static_cast<int>(gj), 0));
        for (int i = 0; i < k; ++i) {
            m.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = a_col[static_cast<size_t>(i)];
            m.e[static_cast<size_t>(i)][static_cast<size_t>(j)] = e_col[static_cast<size_t>(i)];
        }
    }

    if (m.validate()) return std::nullopt;

    const long long n = m.carrier_size();
    for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y) {
            auto want = m.add(m.apply(m.e, m.element_of_index(x)), m.apply(m.a, m.element_of_index(y)));
            if (r.op(static_cast<int>(x), static_cast<int>(y)) != m.index_of_element(want))
                return std::nullopt;
        }
    return m;
}

} // namespace rq
