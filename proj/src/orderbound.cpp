#include "ggk/orderbound.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace ggk {

Int nu_q0(Int a, Int b, const CurveParams& c) noexcept {
    Int count = 0;
    for (Int v = -b; v <= a + 1; ++v) {
        if (tau(v, c) <= b && tau(a + 1 - v, c) <= 0) ++count;
    }
    return count;
}

Int nu_qinf(Int a, Int b, const CurveParams& c) noexcept {
    Int count = 0;
    for (Int v = -a; v <= b + 1; ++v) {
        if (tau_inv(v, c) <= a && tau_inv(b + 1 - v, c) <= 0) ++count;
    }
    return count;
}

namespace {

// tau and tau_inv tabulated on [-span, span], with O(g) shortcuts for the
// quantities the table build needs per cell.
class TauWindow {
public:
    TauWindow(const CurveParams& c, Int span) : c_(c), span_(span), gaps_q0_(gaps_q0(c)), gaps_qinf_(gaps_qinf(c)) {
        fwd_.reserve(static_cast<std::size_t>(2 * span + 1));
        inv_.reserve(static_cast<std::size_t>(2 * span + 1));
        for (Int i = -span; i <= span; ++i) {
            fwd_.push_back(tau(i, c));
            inv_.push_back(tau_inv(i, c));
        }
    }

    Int fwd(Int i) const { return fwd_[static_cast<std::size_t>(i + span_)]; }
    Int inv(Int i) const { return inv_[static_cast<std::size_t>(i + span_)]; }

    // Riemann-Roch once deg >= 2g - 1, pointwise count below that.
    Int dim_l(Int a1, Int a2) const {
        const Int deg = a1 + a2;
        if (deg < 0) return 0;
        if (deg >= 2 * c_.genus - 1) return deg + 1 - c_.genus;
        Int count = 0;
        for (Int i = -a2; i <= a1; ++i) count += fwd(i) <= a2;
        return count;
    }

    Int dim_code(Int a, Int b) const { return dim_l(a, b) - dim_l(a + 1, b - c_.w_deg); }

    // H(Q0) on [0, a+b+1] is the interval minus the gaps, so the pair count is
    // l((a+1) Q0 + b Qinf) less the pairs whose Q0 part is a gap.
    Int nu_q0(Int a, Int b) const {
        Int missing = 0;
        for (const Int gap : gaps_q0_) {
            if (gap > a + b + 1) break;
            missing += fwd(a + 1 - gap) <= b;
        }
        return dim_l(a + 1, b) - missing;
    }

    Int nu_qinf(Int a, Int b) const {
        Int missing = 0;
        for (const Int gap : gaps_qinf_) {
            if (gap > a + b + 1) break;
            missing += inv(b + 1 - gap) <= a;
        }
        return dim_l(a, b + 1) - missing;
    }

private:
    const CurveParams& c_;
    Int span_;
    std::vector<Int> gaps_q0_;
    std::vector<Int> gaps_qinf_;
    std::vector<Int> fwd_;
    std::vector<Int> inv_;
};

}  // namespace

std::size_t BoundTable::index(Int a, Int b) const {
    if (!contains(a, b)) {
        throw std::out_of_range("cell (" + std::to_string(a) + "," + std::to_string(b) + ") outside table");
    }
    // rows 0 .. a-1 have lengths delta+1, delta, ..., delta-a+2
    const Int before = a * (delta_ + 1) - a * (a - 1) / 2;
    return static_cast<std::size_t>(before + b);
}

BoundTable build_table(const CurveParams& c, std::optional<Int> delta) {
    const Int top = delta.value_or(default_delta(c));
    if (top < 0) throw std::invalid_argument("delta must be non-negative, got " + std::to_string(top));
    if (top > std::numeric_limits<std::int32_t>::max() / 2) throw std::invalid_argument("delta too large");

    BoundTable t;
    t.delta_ = top;
    const auto cells = static_cast<std::size_t>((top + 1) * (top + 2) / 2);
    t.bounds_.assign(cells, 0);
    t.dims_.assign(cells, 0);

    const TauWindow w(c, std::max(top + 1, c.w_deg) + 2 * c.genus + 2);
    const auto code_dim = [&](Int a, Int b) { return w.dim_code(a, b); };

    for (Int a = 0; a <= top; ++a) {
        const auto i = t.index(a, top - a);
        t.bounds_[i] = static_cast<std::int32_t>(c.goppa(top));
        t.dims_[i] = static_cast<std::int32_t>(code_dim(a, top - a));
    }

    // Cells of anti-diagonal deg depend only on deg + 1.
    for (Int deg = top - 1; deg >= 0; --deg) {
        for (Int a = 0; a <= deg; ++a) {
            const Int b = deg - a;
            const Int dim = code_dim(a, b);
            t.dims_[t.index(a, b)] = static_cast<std::int32_t>(dim);

            const Int right = t.bounds_[t.index(a + 1, b)];
            Int hbound = right;
            const bool h_differs = dim != t.dims_[t.index(a + 1, b)];
            const Int h_nu = w.nu_q0(a, b);
            if (h_differs && h_nu == 0) throw std::logic_error("codes differ along Q0 but nu is zero");
            if (h_differs && h_nu != 0) hbound = std::min(h_nu, right);

            const Int up = t.bounds_[t.index(a, b + 1)];
            Int vbound = up;
            const bool v_differs = dim != t.dims_[t.index(a, b + 1)];
            const Int v_nu = w.nu_qinf(a, b);
            if (v_differs && v_nu == 0) throw std::logic_error("codes differ along Qinf but nu is zero");
            if (v_differs && v_nu != 0) vbound = std::min(v_nu, up);

            t.bounds_[t.index(a, b)] = static_cast<std::int32_t>(std::max(hbound, vbound));
        }
    }
    return t;
}

Int bound(TwoPointDivisor d, const BoundTable& table, const CurveParams& c) {
    if (d.a1 < 0 || d.a2 < 0) throw std::invalid_argument("bound requires non-negative coefficients");
    if (d.degree() > table.delta()) return c.goppa(d.degree());
    return table.at(d.a1, d.a2);
}

std::vector<Int> axis_recursion(const CurveParams& c, Int delta, Place along) {
    if (delta < 0) throw std::invalid_argument("delta must be non-negative, got " + std::to_string(delta));
    const auto cell = [&](Int i) { return along == Place::Q0 ? TwoPointDivisor{i, 0} : TwoPointDivisor{0, i}; };
    std::vector<Int> out(static_cast<std::size_t>(delta) + 1);
    out[delta] = c.goppa(delta);
    for (Int i = delta - 1; i >= 0; --i) {
        const Int next = out[i + 1];
        out[i] = next;
        if (dim_code(cell(i), c) == dim_code(cell(i + 1), c)) continue;
        const Int nu = along == Place::Q0 ? nu_q0(i, 0, c) : nu_qinf(0, i, c);
        if (nu == 0) throw std::logic_error("codes differ along an axis but nu is zero");
        out[i] = std::min(nu, next);
    }
    return out;
}

std::vector<BestCode> best_codes_per_dimension(const CurveParams& c, const BoundTable& table, OnePointRule rule) {
    std::vector<Int> along_q0;
    std::vector<Int> along_qinf;
    if (rule == OnePointRule::AxisRecursion) {
        along_q0 = axis_recursion(c, table.delta(), Place::Q0);
        along_qinf = axis_recursion(c, table.delta(), Place::Qinf);
    }
    const auto one_point = [&](Int a, Int b) -> std::optional<Int> {
        if (a != 0 && b != 0) return std::nullopt;
        if (rule == OnePointRule::TableAxes) return table.at(a, b);
        Int best = a == 0 ? along_qinf[static_cast<std::size_t>(b)] : along_q0[static_cast<std::size_t>(a)];
        if (a == 0 && b == 0) best = std::max(best, along_q0[0]);
        return best;
    };

    struct Slot {
        bool two_point = false;
        bool one_point = false;
        BestCode best;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(c.n) + 1);

    // Lexicographic scan; strict improvement keeps the smallest maximizing cell.
    for (Int a = 0; a <= table.delta(); ++a) {
        for (Int b = 0; a + b <= table.delta(); ++b) {
            const Int k = c.n - table.dim_code_at(a, b);
            if (k < 1 || k > c.n) continue;
            const Int value = table.at(a, b);
            Slot& s = slots[static_cast<std::size_t>(k)];
            if (!s.two_point || value > s.best.d_2p) {
                s.two_point = true;
                s.best.k = k;
                s.best.divisor = {a, b};
                s.best.d_2p = value;
            }
            if (const auto single = one_point(a, b)) {
                if (!s.one_point || *single > s.best.d_1p) {
                    s.one_point = true;
                    s.best.d_1p = *single;
                }
            }
        }
    }

    std::vector<BestCode> out;
    for (const Slot& s : slots) {
        if (!s.two_point) continue;
        if (!s.one_point) throw std::logic_error("dual dimension " + std::to_string(s.best.k) + " has no one-point cell");
        out.push_back(s.best);
    }
    return out;
}

}  // namespace ggk
