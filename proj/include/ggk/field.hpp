#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ggk/curve.hpp"

namespace ggk {

/// Element of a SmallField: base-p digits of the residue polynomial, low degree first.
using Elem = std::uint32_t;

class FieldTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * F_{p^d} with p^d <= 2^16, built as F_p[w] / (modulus).
 *
 * Elements are integers in [0, p^d) whose base-p digits are the coefficients
 * of a residue polynomial in w. Multiplication goes through log / antilog
 * tables over the smallest primitive element (in integer order), which need
 * not be w itself.
 */
class SmallField {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Throws FieldTooLarge if p^d exceeds kMaxOrder and std::invalid_argument if
    /// the modulus is not monic of degree d or is reducible.
    SmallField(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus);

    [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
    [[nodiscard]] std::uint32_t degree() const noexcept { return d_; }
    [[nodiscard]] std::uint32_t order() const noexcept { return order_; }
    /// Coefficients low to high, length d + 1, leading 1.
    [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    [[nodiscard]] Elem primitive() const noexcept { return exp_[1]; }

    [[nodiscard]] Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
        return add_digits(a, b);
    }
    [[nodiscard]] Elem neg(Elem a) const noexcept { return neg_[a]; }
    [[nodiscard]] Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }

    [[nodiscard]] Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws std::domain_error for a == 0.
    [[nodiscard]] Elem inv(Elem a) const;
    /// a^k for any integer k; 0^0 == 1. Throws std::domain_error for a == 0, k < 0.
    [[nodiscard]] Elem pow(Elem a, Int k) const;
    /// Image of the integer v under Z -> F_p.
    [[nodiscard]] Elem from_int(Int v) const noexcept { return static_cast<Elem>(euclid(v, p_)); }

    /// Discrete log base primitive(); requires a != 0.
    [[nodiscard]] std::uint32_t log(Elem a) const noexcept { return log_[a]; }
    [[nodiscard]] Elem exp(std::uint32_t k) const noexcept { return exp_[k % (order_ - 1)]; }

private:
    static Int euclid(Int v, Int m) noexcept {
        const Int r = v % m;
        return r < 0 ? r + m : r;
    }

    [[nodiscard]] Elem add_digits(Elem a, Elem b) const noexcept;
    [[nodiscard]] Elem mul_poly(Elem a, Elem b) const noexcept;

    std::uint32_t p_;
    std::uint32_t d_;
    std::uint32_t order_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;           // length 2 (order - 1)
    std::vector<std::uint32_t> log_;  // log_[0] unused
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;  // odd p and order <= 1024 only
};

/// True iff the monic polynomial (coefficients low to high) over F_p has no
/// monic factor of degree 1 .. deg / 2. Exhaustive trial division.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// F_{q^(2e)} with a fixed modulus: w^2+w+1 for F_4, w^2+1 for F_9, w^6+w+1 for
/// F_64; otherwise the first irreducible monic polynomial of the right degree
/// with coefficients enumerated as a base-p counter (constant term fastest).
/// Throws FieldTooLarge if q^(2e) > 2^16.
SmallField make_field(const CurveParams& c);

}  // namespace ggk
