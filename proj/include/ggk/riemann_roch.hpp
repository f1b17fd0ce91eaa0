#pragma once

#include <vector>

#include "ggk/curve.hpp"
#include "ggk/semigroup.hpp"

namespace ggk {

/// G = a1 Q0 + a2 Qinf. Either coefficient may be negative.
struct TwoPointDivisor {
    Int a1 = 0;
    Int a2 = 0;

    [[nodiscard]] constexpr Int degree() const noexcept { return a1 + a2; }

    friend constexpr TwoPointDivisor operator+(TwoPointDivisor x, TwoPointDivisor y) noexcept {
        return {x.a1 + y.a1, x.a2 + y.a2};
    }
    friend bool operator==(const TwoPointDivisor&, const TwoPointDivisor&) = default;
};

enum class Place { Q0, Qinf };

/// l(G) = #{ i in [-a2, a1] : tau(i) <= a2 }; 0 when deg G < 0.
Int dim_l(TwoPointDivisor d, const CurveParams& c) noexcept;

/// Monomial basis x^k y^l z^m of L(G), one per counted pole order at Q0, ascending in that order.
std::vector<PoleTriple> basis_exponents(TwoPointDivisor d, const CurveParams& c);

/// dim C_L(D, G) = l(G) - l(G + Q0 - w_deg Qinf).
Int dim_code(TwoPointDivisor d, const CurveParams& c) noexcept;

/// True iff C_L(D, G + P) == C_L(D, G) for P = Q0 or Qinf.
bool codes_equal_after_adding(TwoPointDivisor d, Place p, const CurveParams& c) noexcept;

}  // namespace ggk
