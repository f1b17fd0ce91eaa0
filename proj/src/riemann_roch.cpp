#include "ggk/riemann_roch.hpp"

namespace ggk {

Int dim_l(TwoPointDivisor d, const CurveParams& c) noexcept {
    if (d.degree() < 0) return 0;
    Int count = 0;
    for (Int i = -d.a2; i <= d.a1; ++i) {
        if (tau(i, c) <= d.a2) ++count;
    }
    return count;
}

std::vector<PoleTriple> basis_exponents(TwoPointDivisor d, const CurveParams& c) {
    std::vector<PoleTriple> out;
    if (d.degree() < 0) return out;
    for (Int i = -d.a2; i <= d.a1; ++i) {
        const PoleTriple t = decompose(i, c);
        if (pole_order_qinf(t, c) <= d.a2) out.push_back(t);
    }
    return out;
}

Int dim_code(TwoPointDivisor d, const CurveParams& c) noexcept {
    return dim_l(d, c) - dim_l({d.a1 + 1, d.a2 - c.w_deg}, c);
}

bool codes_equal_after_adding(TwoPointDivisor d, Place p, const CurveParams& c) noexcept {
    const TwoPointDivisor step = p == Place::Q0 ? TwoPointDivisor{1, 0} : TwoPointDivisor{0, 1};
    return dim_code(d + step, c) == dim_code(d, c);
}

}  // namespace ggk
