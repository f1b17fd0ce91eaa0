#pragma once

#include <optional>
#include <vector>

#include "ggk/curve.hpp"
#include "ggk/field.hpp"
#include "ggk/riemann_roch.hpp"
#include "ggk/semigroup.hpp"

namespace ggk {

/// Affine rational point (x, y, z) of the curve; (0, 0, 0) is Q0.
struct RationalPoint {
    Elem x = 0;
    Elem y = 0;
    Elem z = 0;

    friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

/// Dense row-major matrix over a SmallField.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Rank by Gaussian elimination.
std::size_t rank(Matrix m, const SmallField& f);

/// Basis of { v : m v^T = 0 } as the rows of the result.
Matrix nullspace(Matrix m, const SmallField& f);

/// Rows of `top` followed by rows of `bottom`; column counts must match.
Matrix stack(const Matrix& top, const Matrix& bottom);

/// Every affine point with x^q + x = y^(q+1) and z^r = y^(q^2) - y, sorted by
/// (x, y, z) as integers. Q0 included.
std::vector<RationalPoint> enumerate_points(const CurveParams& c, const SmallField& f);

/// Support of D: enumerate_points without Q0.
std::vector<RationalPoint> code_support(const CurveParams& c, const SmallField& f);

/// x^k y^l z^m at p, with 0^0 = 1. Throws std::domain_error for a zero base
/// under a negative exponent.
Elem evaluate_monomial(const PoleTriple& t, const RationalPoint& p, const SmallField& f);

/// Generator matrix of C_L(D, G): one row per basis monomial of L(G), one
/// column per point of D.
struct EvalCode {
    TwoPointDivisor divisor;
    std::vector<RationalPoint> points;
    Matrix matrix;
};

EvalCode generator_matrix(TwoPointDivisor d, const CurveParams& c, const SmallField& f,
                          const std::vector<RationalPoint>& points);
EvalCode generator_matrix(TwoPointDivisor d, const CurveParams& c, const SmallField& f);

/// Exact minimum distance of a dual code, or why there is none.
struct DualDistance {
    enum class Status { Exact, Infeasible, Empty };
    Status status = Status::Empty;
    Int value = 0;  ///< meaningful for Exact only

    [[nodiscard]] bool exact() const noexcept { return status == Status::Exact; }
};

inline constexpr Int kDefaultWorkLimit = Int{1} << 28;

/// Minimum weight of C^perp by enumerating all nonzero codewords from a
/// nullspace basis (one per projective class). Infeasible when
/// order^(dual dim) > limit; Empty when the dual code is zero.
DualDistance dual_min_distance(const EvalCode& code, const SmallField& f, Int limit = kDefaultWorkLimit);

/// h(P) = (zf)'(z(P)) for each point, where zf vanishes exactly on Q0 + D.
/// Throws std::logic_error if any value is zero.
std::vector<Elem> dual_multipliers(const CurveParams& c, const SmallField& f, const std::vector<RationalPoint>& points);

/// Exponent -> F_p coefficient pairs of the polynomial zf in z, ascending.
std::vector<std::pair<Int, Int>> zf_polynomial(const CurveParams& c);

/// Divisor H = -(a1 + 1) Q0 + (m - a2) Qinf paired with G under duality.
inline TwoPointDivisor dual_divisor(TwoPointDivisor d, Int m) noexcept { return {-(d.a1 + 1), m - d.a2}; }

/// True iff h * C_L(D, G)^perp == C_L(D, H) for H = dual_divisor(d, m).
/// m defaults to c.m_dual.
bool check_duality(TwoPointDivisor d, const CurveParams& c, const SmallField& f,
                   const std::vector<RationalPoint>& points, std::optional<Int> m = std::nullopt);

}  // namespace ggk
