#include "rq/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace rq {

void LaurentPoly::insert(int exp, Int c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::constant(Int c) { return monomial(0, std::move(c)); }
LaurentPoly LaurentPoly::variable() { return monomial(1, 1); }

LaurentPoly LaurentPoly::monomial(int exp, Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = std::move(c);
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (is_zero()) throw InputError("zero polynomial has no support");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (is_zero()) throw InputError("zero polynomial has no support");
    return terms_.rbegin()->first;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.insert(ea + eb, ca * cb);
    return p;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly p;
    for (const auto& [e, c] : a.terms_) p.terms_[e] = -c;
    return p;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag;
            os << 'A';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    LaurentPoly p;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&](bool allow_sign) -> Int {
        size_t start = i;
        if (allow_sign && i < n && (text[i] == '+' || text[i] == '-')) ++i;
        size_t digits = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw InputError("expected integer at position " + std::to_string(start) +
                                          " in polynomial '" + std::string(text) + "'");
        return Int(std::string(text.substr(start, i - start)));
    };

    skip_ws();
    if (i == n) throw InputError("empty polynomial");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (!any && text[i] == '+') throw InputError("polynomial may not start with '+'");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw InputError("expected '+' or '-' at position " + std::to_string(i));
        }
        Int coeff = 1;
        bool saw_coeff = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = parse_int(false);
            saw_coeff = true;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exp = 0;
        if (i < n && (text[i] == 'A' || text[i] == 'a')) {
            ++i;
            exp = 1;
            if (i < n && text[i] == '^') {
                ++i;
                exp = static_cast<int>(parse_int(true));
            }
        } else if (!saw_coeff) {
            throw InputError("expected coefficient or 'A' at position " + std::to_string(i));
        }
        p.insert(exp, sign * coeff);
        any = true;
    }
    if (!any) throw InputError("empty polynomial");
    return p;
}

LaurentPoly divide_by_one_minus_a(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    if (p.eval_at_one() != 0)
        throw InputError("polynomial is not divisible by (1 - A): augmentation " +
                         p.eval_at_one().str() + " != 0");
    // (1 - A) * sum s_k A^k has coefficients s_k - s_{k-1}; prefix sums invert it
    const int lo = p.min_exponent();
    const int hi = p.max_exponent();
    LaurentPoly q;
    Int run = 0;
    for (int e = lo; e < hi; ++e) {
        run += p.coeff(e);
        q += LaurentPoly::monomial(e, run);
    }
    return q;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw InputError("division by zero polynomial");
    if (num.is_zero()) return num;
    // shift to ordinary polynomials and long-divide from the top
    const int shift = num.min_exponent() - den.min_exponent();
    const int nd = num.max_exponent() - num.min_exponent();
    const int dd = den.max_exponent() - den.min_exponent();
    if (nd < dd) throw InputError("inexact polynomial division");
    std::vector<Int> rem(static_cast<size_t>(nd) + 1), div(static_cast<size_t>(dd) + 1);
    for (const auto& [e, c] : num.terms()) rem[static_cast<size_t>(e - num.min_exponent())] = c;
    for (const auto& [e, c] : den.terms()) div[static_cast<size_t>(e - den.min_exponent())] = c;
    std::vector<Int> quot(static_cast<size_t>(nd - dd) + 1);
    for (int k = nd - dd; k >= 0; --k) {
        Int lead = rem[static_cast<size_t>(k + dd)];
        if (lead == 0) continue;
        if (lead % div[static_cast<size_t>(dd)] != 0) throw InputError("inexact polynomial division");
        Int f = lead / div[static_cast<size_t>(dd)];
        quot[static_cast<size_t>(k)] = f;
        for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= f * div[static_cast<size_t>(j)];
    }
    for (const Int& r : rem)
        if (r != 0) throw InputError("inexact polynomial division");
    LaurentPoly q;
    for (int k = 0; k <= nd - dd; ++k)
        q += LaurentPoly::monomial(k + shift, quot[static_cast<size_t>(k)]);
    return q;
}

} // namespace rq
