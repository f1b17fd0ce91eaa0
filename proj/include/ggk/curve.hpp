#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ggk {

using Int = std::int64_t;

/// Raised for (q, e) pairs outside the supported family.
class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Integer numerology of the generalized Giulietti-Korchmaros curve
 *
 *     x^q + x = y^(q+1),   z^r = y^(q^2) - y,   r = (q^e + 1) / (q + 1)
 *
 * over F_{q^(2e)}. Q0 is the zero of x and Qinf its pole; the code support D
 * is every other rational place.
 */
struct CurveParams {
    Int q = 0;
    Int e = 0;
    Int r = 0;
    Int genus = 0;
    Int n_places = 0;  ///< rational places, Qinf included
    Int n = 0;         ///< code length, n_places - 2

    // pole orders at Qinf
    Int gen_x = 0;
    Int gen_y = 0;
    Int gen_z = 0;

    /// Qinf coefficient of the divisor of zf: (zf) = Q0 + D - w_deg * Qinf.
    Int w_deg = 0;

    /// Qinf coefficient of the canonical divisor (dz/zf) = -Q0 - D + m_dual * Qinf.
    /// Forced by deg = 2g - 2, i.e. m_dual = n + 2g - 1.
    Int m_dual = 0;

    /// Alternative closed form q^(2e+2) - q^(e+3) + 2q^(e+2) - q^e + q^2 - 1 for
    /// the same coefficient. It does not give degree 2g - 2 and fails the
    /// duality check; kept so the discrepancy stays testable.
    Int m_dual_printed = 0;

    /// Goppa bound for the dual of C_L(D, G) with deg G = degree.
    [[nodiscard]] Int goppa(Int degree) const noexcept { return degree - 2 * genus + 2; }

    friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// Validates (q, e) and derives every constant. Throws InvalidParameters with a
/// distinct message for q < 2, q not a prime power, e < 1, e even, or
/// numerology that does not fit in 64 bits.
CurveParams new_curve(Int q, Int e);

/// Smallest prime factor p and exponent s with q = p^s, or {0, 0} if q is not a prime power.
struct PrimePower {
    Int p = 0;
    Int s = 0;
};
PrimePower prime_power(Int q) noexcept;

/// Overflow-checked q^k for k >= 0.
Int checked_pow(Int base, Int exp);

}  // namespace ggk
