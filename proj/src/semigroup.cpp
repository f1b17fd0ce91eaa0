#include "ggk/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggk {

PoleTriple decompose(Int i, const CurveParams& c) noexcept {
    // -i = r * (k (q+1) + l) + m
    const Int m = euclid_mod(-i, c.r);
    const Int s = (-i - m) / c.r;
    return {euclid_div(s, c.q + 1), euclid_mod(s, c.q + 1), m};
}

Int pole_order_q0(const PoleTriple& t, const CurveParams& c) noexcept {
    return -t.k * c.gen_x - t.l * c.r - t.m;
}

Int pole_order_qinf(const PoleTriple& t, const CurveParams& c) noexcept {
    return t.k * c.gen_x + t.l * c.gen_y + t.m * c.gen_z;
}

Int tau(Int i, const CurveParams& c) noexcept { return pole_order_qinf(decompose(i, c), c); }

Int tau_inv(Int j, const CurveParams& c) noexcept {
    for (Int l = 0; l <= c.q; ++l) {
        for (Int m = 0; m < c.r; ++m) {
            const Int rest = j - l * c.gen_y - m * c.gen_z;
            if (euclid_mod(rest, c.gen_x) == 0) return pole_order_q0({rest / c.gen_x, l, m}, c);
        }
    }
    // (l, m) -> l q r + m q^3 hits every residue mod q^e + 1 exactly once.
    std::terminate();
}

bool is_nongap_q0(Int a, Int b_cap, const CurveParams& c) noexcept { return tau(a, c) <= b_cap; }

bool is_nongap_qinf(Int b, Int a_cap, const CurveParams& c) noexcept { return tau_inv(b, c) <= a_cap; }

namespace {

template <typename IsNongap>
std::vector<Int> collect_gaps(const CurveParams& c, IsNongap is_nongap) {
    const Int top = 2 * c.genus + std::max({c.gen_x, c.gen_y, c.gen_z});
    std::vector<Int> gaps;
    for (Int i = 1; i <= top; ++i) {
        if (!is_nongap(i)) gaps.push_back(i);
    }
    if (static_cast<Int>(gaps.size()) != c.genus) throw std::logic_error("gap count differs from the genus");
    return gaps;
}

}  // namespace

std::vector<Int> gaps_q0(const CurveParams& c) {
    return collect_gaps(c, [&](Int i) { return is_nongap_q0(i, 0, c); });
}

std::vector<Int> gaps_qinf(const CurveParams& c) {
    return collect_gaps(c, [&](Int i) { return is_nongap_qinf(i, 0, c); });
}

bool in_generated_semigroup(Int b, const CurveParams& c) {
    if (b < 0) return false;
    std::vector<char> reach(static_cast<std::size_t>(b) + 1, 0);
    reach[0] = 1;
    for (const Int g : {c.gen_z, c.gen_y, c.gen_x}) {
        for (Int v = g; v <= b; ++v) {
            if (reach[v - g]) reach[v] = 1;
        }
    }
    return reach[b] != 0;
}

}  // namespace ggk
