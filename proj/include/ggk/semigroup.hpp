#pragma once

#include <vector>

#include "ggk/curve.hpp"

namespace ggk {

/// Exponents of the monomial x^k y^l z^m. As a pole-order label it encodes
/// i = -k(q^e+1) - l*r - m with 0 <= l <= q and 0 <= m < r.
struct PoleTriple {
    Int k = 0;
    Int l = 0;
    Int m = 0;

    friend bool operator==(const PoleTriple&, const PoleTriple&) = default;
};

/// Non-negative remainder of a modulo b (b > 0).
constexpr Int euclid_mod(Int a, Int b) noexcept {
    const Int r = a % b;
    return r < 0 ? r + b : r;
}

/// Quotient matching euclid_mod: a == euclid_div(a, b) * b + euclid_mod(a, b).
constexpr Int euclid_div(Int a, Int b) noexcept { return (a - euclid_mod(a, b)) / b; }

/// The unique triple of the monomial with pole order i at Q0.
PoleTriple decompose(Int i, const CurveParams& c) noexcept;

/// Pole order at Q0 of the monomial with exponents t (inverse of decompose).
Int pole_order_q0(const PoleTriple& t, const CurveParams& c) noexcept;

/// Pole order at Qinf of the monomial with exponents t.
Int pole_order_qinf(const PoleTriple& t, const CurveParams& c) noexcept;

/// tau(i): smallest Qinf pole order among functions regular off {Q0, Qinf}
/// with pole order exactly i at Q0.
Int tau(Int i, const CurveParams& c) noexcept;

/// Inverse of tau, by scanning the q^e + 1 residue candidates for (l, m).
Int tau_inv(Int j, const CurveParams& c) noexcept;

/// a is a (b_cap Qinf)-non-gap at Q0. With b_cap = 0 this is a in H(Q0).
bool is_nongap_q0(Int a, Int b_cap, const CurveParams& c) noexcept;

/// b is an (a_cap Q0)-non-gap at Qinf. With a_cap = 0 this is b in H(Qinf).
bool is_nongap_qinf(Int b, Int a_cap, const CurveParams& c) noexcept;

/// Gaps of the Weierstrass semigroups H(Q0) and H(Qinf), ascending. Both
/// enumerate [1, 2g + max generator] and throw std::logic_error if the count
/// differs from the genus.
std::vector<Int> gaps_q0(const CurveParams& c);
std::vector<Int> gaps_qinf(const CurveParams& c);

/// b in <q^3, q r, q^e + 1>, decided by a subset-sum sieve over [0, b]. Independent
/// of tau; used as a cross-check of is_nongap_qinf(b, 0).
bool in_generated_semigroup(Int b, const CurveParams& c);

}  // namespace ggk
