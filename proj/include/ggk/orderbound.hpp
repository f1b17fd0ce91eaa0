#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ggk/curve.hpp"
#include "ggk/riemann_roch.hpp"

namespace ggk {

/// Number of pairs (u, v) in H(Q0) x H(Q0; b Qinf) with u + v = a + 1.
/// This is the per-step quantity for walking from a Q0 + b Qinf to (a+1) Q0 + b Qinf.
Int nu_q0(Int a, Int b, const CurveParams& c) noexcept;

/// Mirror of nu_q0 for the step a Q0 + b Qinf -> a Q0 + (b+1) Qinf.
Int nu_qinf(Int a, Int b, const CurveParams& c) noexcept;

/**
 * Order bounds for the duals C_L(D, a Q0 + b Qinf)^perp, a, b >= 0, a + b <= delta.
 *
 * Cells on the outer anti-diagonal a + b = delta hold the Goppa bound; every
 * other cell is filled from its two neighbours (a+1, b) and (a, b+1).
 * Immutable after build_table returns.
 */
class BoundTable {
public:
    BoundTable() = default;

    [[nodiscard]] Int delta() const noexcept { return delta_; }
    [[nodiscard]] bool contains(Int a, Int b) const noexcept {
        return a >= 0 && b >= 0 && a + b <= delta_;
    }

    /// Order bound for cell (a, b); requires contains(a, b).
    [[nodiscard]] Int at(Int a, Int b) const { return bounds_.at(index(a, b)); }

    /// dim C_L(D, a Q0 + b Qinf) for cell (a, b); requires contains(a, b).
    [[nodiscard]] Int dim_code_at(Int a, Int b) const { return dims_.at(index(a, b)); }

    friend bool operator==(const BoundTable&, const BoundTable&) = default;

private:
    friend BoundTable build_table(const CurveParams& c, std::optional<Int> delta);

    [[nodiscard]] std::size_t index(Int a, Int b) const;

    Int delta_ = -1;
    // Row a holds b = 0 .. delta - a. Values are bounded by delta + 2.
    std::vector<std::int32_t> bounds_;
    std::vector<std::int32_t> dims_;
};

/// Default maximum degree: beyond n_places + 2g the order bound equals the Goppa bound.
inline Int default_delta(const CurveParams& c) noexcept { return c.n_places + 2 * c.genus; }

/// Backtracking table build. Throws std::invalid_argument for delta < 0 and
/// std::logic_error if a step where the codes differ ever has a zero nu count.
BoundTable build_table(const CurveParams& c, std::optional<Int> delta = std::nullopt);

/// Table entry for a1, a2 >= 0, falling back to the Goppa bound past the table's degree.
Int bound(TwoPointDivisor d, const BoundTable& table, const CurveParams& c);

struct BestCode {
    Int k = 0;  ///< dual dimension n - dim C_L(D, G)
    TwoPointDivisor divisor;
    Int d_2p = 0;
    Int d_1p = 0;

    friend bool operator==(const BestCode&, const BestCode&) = default;
};

/// How the one-point column is estimated.
enum class OnePointRule {
    /// Read the two-point table on the axes a = 0 and b = 0.
    TableAxes,
    /// Separate recursions that only ever add Q0 (resp. Qinf), seeded with the
    /// Goppa bound at the table's degree.
    AxisRecursion,
};

/// One-point bounds along an axis under OnePointRule::AxisRecursion; index i
/// is the bound for i Q0 (along = Place::Q0) or i Qinf.
std::vector<Int> axis_recursion(const CurveParams& c, Int delta, Place along);

/// For each dual dimension k in [1, n] attained by some cell: the largest bound
/// (lexicographically smallest cell among ties) and the largest one-point bound
/// for the same k. Ascending in k.
std::vector<BestCode> best_codes_per_dimension(const CurveParams& c, const BoundTable& table,
                                               OnePointRule rule = OnePointRule::TableAxes);

}  // namespace ggk
