#include "rq/rack_ring.hpp"

namespace rq {

std::string RackRingElement::str() const {
    if (b.is_zero()) return a.str();
    std::string s;
    if (!a.is_zero()) s = a.str() + " + ";
    return s + "(" + b.str() + ")E";
}

RackRingElement pullback_lift(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.eval_at_one() != q.eval_at_one())
        throw InputError("pair is not in the pullback: p(1) = " + p.eval_at_one().str() +
                         " but q(1) = " + q.eval_at_one().str());
    return {p, divide_by_one_minus_a(q - p)};
}

} // namespace rq
