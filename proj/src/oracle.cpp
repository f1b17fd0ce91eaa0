#include "ggk/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace ggk {

namespace {

// row(dst) -= factor * row(src), starting at column `from`.
void axpy_row(Matrix& m, std::size_t dst, std::size_t src, Elem factor, std::size_t from, const SmallField& f) {
    if (factor == 0) return;
    for (std::size_t j = from; j < m.cols; ++j) {
        const Elem s = m(src, j);
        if (s != 0) m(dst, j) = f.sub(m(dst, j), f.mul(factor, s));
    }
}

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& m, const SmallField& f, bool reduce_above) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row) {
            for (std::size_t j = col; j < m.cols; ++j) std::swap(m(pivot, j), m(row, j));
        }
        const Elem scale = f.inv(m(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m(row, j) = f.mul(m(row, j), scale);
        for (std::size_t i = reduce_above ? 0 : row + 1; i < m.rows; ++i) {
            if (i != row) axpy_row(m, i, row, m(i, col), col, f);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

class CodewordSearch {
public:
    CodewordSearch(const Matrix& basis, const SmallField& f)
        : basis_(basis), f_(f), acc_(basis.rows + 1, std::vector<Elem>(basis.cols, 0)) {}

    Int run() {
        visit(0, false);
        return best_;
    }

private:
    void visit(std::size_t level, bool started) {
        if (level == basis_.rows) {
            if (started) {
                const auto weight = std::count_if(acc_[level].begin(), acc_[level].end(), [](Elem v) { return v != 0; });
                best_ = std::min<Int>(best_, weight);
            }
            return;
        }
        // Leading nonzero coefficient fixed to 1: one word per projective class.
        const Elem last = started ? f_.order() - 1 : 1;
        for (Elem coef = 0; coef <= last; ++coef) {
            auto& next = acc_[level + 1];
            const auto& cur = acc_[level];
            if (coef == 0) {
                next = cur;
            } else {
                for (std::size_t j = 0; j < basis_.cols; ++j) next[j] = f_.add(cur[j], f_.mul(coef, basis_(level, j)));
            }
            visit(level + 1, started || coef != 0);
        }
    }

    const Matrix& basis_;
    const SmallField& f_;
    std::vector<std::vector<Elem>> acc_;
    Int best_ = std::numeric_limits<Int>::max();
};

}  // namespace

std::size_t rank(Matrix m, const SmallField& f) { return rref(m, f, false).size(); }

Matrix nullspace(Matrix m, const SmallField& f) {
    const auto pivots = rref(m, f, true);
    std::vector<bool> is_pivot(m.cols, false);
    for (const auto col : pivots) is_pivot[col] = true;

    Matrix out(m.cols - pivots.size(), m.cols);
    std::size_t row = 0;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        out(row, free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out(row, pivots[i]) = f.neg(m(i, free));
        ++row;
    }
    return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.cols != bottom.cols) throw std::invalid_argument("column counts differ");
    Matrix out(top.rows + bottom.rows, top.cols);
    std::copy(top.data.begin(), top.data.end(), out.data.begin());
    std::copy(bottom.data.begin(), bottom.data.end(), out.data.begin() + static_cast<std::ptrdiff_t>(top.data.size()));
    return out;
}

std::vector<RationalPoint> enumerate_points(const CurveParams& c, const SmallField& f) {
    const Elem order = f.order();
    // x -> x^q + x and z -> z^r, inverted into buckets.
    std::vector<std::vector<Elem>> x_by_trace(order);
    std::vector<std::vector<Elem>> z_by_power(order);
    for (Elem v = 0; v < order; ++v) {
        x_by_trace[f.add(f.pow(v, c.q), v)].push_back(v);
        z_by_power[f.pow(v, c.r)].push_back(v);
    }

    std::vector<RationalPoint> out;
    for (Elem y = 0; y < order; ++y) {
        const auto& xs = x_by_trace[f.pow(y, c.q + 1)];
        if (xs.empty()) continue;
        const auto& zs = z_by_power[f.sub(f.pow(y, c.q * c.q), y)];
        for (const Elem x : xs) {
            for (const Elem z : zs) out.push_back({x, y, z});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RationalPoint> code_support(const CurveParams& c, const SmallField& f) {
    auto pts = enumerate_points(c, f);
    std::erase(pts, RationalPoint{0, 0, 0});
    return pts;
}

Elem evaluate_monomial(const PoleTriple& t, const RationalPoint& p, const SmallField& f) {
    return f.mul(f.pow(p.x, t.k), f.mul(f.pow(p.y, t.l), f.pow(p.z, t.m)));
}

EvalCode generator_matrix(TwoPointDivisor d, const CurveParams& c, const SmallField& f,
                          const std::vector<RationalPoint>& points) {
    const auto basis = basis_exponents(d, c);
    EvalCode code{d, points, Matrix(basis.size(), points.size())};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) code.matrix(i, j) = evaluate_monomial(basis[i], points[j], f);
    }
    return code;
}

EvalCode generator_matrix(TwoPointDivisor d, const CurveParams& c, const SmallField& f) {
    return generator_matrix(d, c, f, code_support(c, f));
}

DualDistance dual_min_distance(const EvalCode& code, const SmallField& f, Int limit) {
    const Matrix basis = nullspace(code.matrix, f);
    if (basis.rows == 0) return {DualDistance::Status::Empty, 0};

    Int work = 1;
    for (std::size_t i = 0; i < basis.rows; ++i) {
        work *= f.order();
        if (work > limit) return {DualDistance::Status::Infeasible, 0};
    }
    return {DualDistance::Status::Exact, CodewordSearch(basis, f).run()};
}

std::vector<std::pair<Int, Int>> zf_polynomial(const CurveParams& c) {
    const Int p = prime_power(c.q).p;
    const Int t = (c.e - 1) / 2;
    const Int qe = checked_pow(c.q, c.e);
    std::map<Int, Int> terms;
    terms[1] += 1;
    for (Int i = 0; i < t; ++i) {
        const Int q2i2 = checked_pow(c.q, 2 * i + 2);
        terms[1 + c.r * (q2i2 - 1 + qe - c.q)] += 1;
        terms[1 + c.r * c.q * (q2i2 - 1)] += 1;
    }
    std::vector<std::pair<Int, Int>> out;
    for (const auto& [exp, coef] : terms) {
        if (coef % p != 0) out.emplace_back(exp, coef % p);
    }
    return out;
}

std::vector<Elem> dual_multipliers(const CurveParams& c, const SmallField& f, const std::vector<RationalPoint>& points) {
    // formal derivative in z
    std::vector<std::pair<Int, Elem>> deriv;
    for (const auto& [exp, coef] : zf_polynomial(c)) {
        const Elem scaled = f.from_int(coef * (exp % f.characteristic()));
        if (scaled != 0) deriv.emplace_back(exp - 1, scaled);
    }

    std::vector<Elem> out;
    out.reserve(points.size());
    for (const auto& pt : points) {
        Elem h = 0;
        for (const auto& [exp, coef] : deriv) h = f.add(h, f.mul(coef, f.pow(pt.z, exp)));
        if (h == 0) throw std::logic_error("(zf)' vanishes at a point of D");
        out.push_back(h);
    }
    return out;
}

bool check_duality(TwoPointDivisor d, const CurveParams& c, const SmallField& f,
                   const std::vector<RationalPoint>& points, std::optional<Int> m) {
    const auto h = dual_multipliers(c, f, points);
    Matrix dual = nullspace(generator_matrix(d, c, f, points).matrix, f);
    for (std::size_t i = 0; i < dual.rows; ++i) {
        for (std::size_t j = 0; j < dual.cols; ++j) dual(i, j) = f.mul(dual(i, j), h[j]);
    }
    const Matrix other = generator_matrix(dual_divisor(d, m.value_or(c.m_dual)), c, f, points).matrix;

    const auto r_dual = dual.rows;  // nullspace rows are independent
    const auto r_other = rank(other, f);
    return r_other == r_dual && rank(stack(dual, other), f) == r_dual;
}

}  // namespace ggk
