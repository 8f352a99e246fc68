#pragma once

#include <string>

#include "rq/laurent.hpp"

namespace rq {

/// Element a + b*E of Z[A^+-, E]/(E^2 - E(1-A)). The (a, b) pair is the
/// canonical form, so equality is componentwise.
struct RackRingElement {
    LaurentPoly a, b;

    friend bool operator==(const RackRingElement&, const RackRingElement&) = default;
    friend RackRingElement operator+(const RackRingElement& u, const RackRingElement& v) {
        return {u.a + v.a, u.b + v.b};
    }
    friend RackRingElement operator-(const RackRingElement& u, const RackRingElement& v) {
        return {u.a - v.a, u.b - v.b};
    }
    // (a + bE)(c + dE) = ac + (ad + bc + bd(1-A))E
    friend RackRingElement operator*(const RackRingElement& u, const RackRingElement& v) {
        return {u.a * v.a, u.a * v.b + u.b * v.a + u.b * v.b * one_minus_a()};
    }

    static RackRingElement from_laurent(LaurentPoly p) { return {std::move(p), LaurentPoly()}; }
    static RackRingElement e() { return {LaurentPoly(), LaurentPoly::constant(1)}; }

    std::string str() const;
};

/// Ring map E -> 0.
inline LaurentPoly project_zero(const RackRingElement& u) { return u.a; }

/// Ring map E -> (1 - A).
inline LaurentPoly project_quandle(const RackRingElement& u) {
    return u.a + u.b * one_minus_a();
}

/// The unique element with project_zero = p and project_quandle = q;
/// requires p(1) = q(1), which makes (q - p)/(1 - A) exact.
RackRingElement pullback_lift(const LaurentPoly& p, const LaurentPoly& q);

} // namespace rq
