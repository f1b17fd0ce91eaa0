#include <doctest.h>

#include <algorithm>
#include <map>
#include <utility>

#include "ggk/orderbound.hpp"

using namespace ggk;

namespace {

// Straight transcription of the backtracking recursion over a std::map, using
// only the pointwise nu counts and dim_code.
std::map<std::pair<Int, Int>, Int> naive_table(const CurveParams& c, Int delta) {
    std::map<std::pair<Int, Int>, Int> t;
    for (Int a = 0; a <= delta; ++a) t[{a, delta - a}] = delta - 2 * c.genus + 2;
    for (Int deg = delta - 1; deg >= 0; --deg) {
        for (Int a = deg; a >= 0; --a) {
            const Int b = deg - a;
            const Int dim = dim_code({a, b}, c);

            Int h = t.at({a + 1, b});
            const Int wh = nu_q0(a, b, c);
            if (wh != 0 && dim != dim_code({a + 1, b}, c)) h = std::min(wh, h);

            Int v = t.at({a, b + 1});
            const Int wv = nu_qinf(a, b, c);
            if (wv != 0 && dim != dim_code({a, b + 1}, c)) v = std::min(wv, v);

            t[{a, b}] = std::max(h, v);
        }
    }
    return t;
}

const std::vector<std::pair<Int, Int>> kSmall = {{2, 1}, {3, 1}, {4, 1}, {2, 3}};

}  // namespace

TEST_SUITE("orderbound") {

TEST_CASE("table agrees with the naive recursion cell by cell") {
    for (const auto& [q, e] : std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {2, 3}}) {
        const auto c = new_curve(q, e);
        const auto t = build_table(c);
        const auto ref = naive_table(c, t.delta());
        CAPTURE(q);
        CAPTURE(e);
        for (const auto& [cell, value] : ref) {
            REQUIRE(t.at(cell.first, cell.second) == value);
            REQUIRE(t.dim_code_at(cell.first, cell.second) == dim_code({cell.first, cell.second}, c));
        }
    }
}

TEST_CASE("q=2 e=3 reference entries") {
    const auto c = new_curve(2, 3);
    const auto t = build_table(c);
    CHECK(t.delta() == 245);
    CHECK(t.at(0, 0) == 2);
    CHECK(t.at(28, 7) == 18);
    CHECK(t.at(22, 7) == 13);
    CHECK(t.at(228, 6) == 223);
    CHECK(t.at(8, 7) == 4);
}

TEST_CASE("nu examples") {
    const auto c = new_curve(2, 3);
    CHECK(nu_q0(0, 0, c) == 0);
    CHECK(nu_qinf(0, 0, c) == 0);
    const auto h = new_curve(2, 1);
    CHECK(nu_q0(0, 0, h) == 0);
    CHECK(nu_q0(1, 0, h) == 2);  // 2 = 0 + 2 = 2 + 0
}

TEST_CASE("nu floor and exact value in the stable range") {
    for (const auto& [q, e] : kSmall) {
        const auto c = new_curve(q, e);
        const Int top = 4 * c.genus + 12;
        for (Int a = 0; a <= top; ++a) {
            for (Int b = 0; b <= top; ++b) {
                const Int floor = a + b - 2 * c.genus + 2;
                const Int h = nu_q0(a, b, c);
                const Int v = nu_qinf(a, b, c);
                REQUIRE(h >= floor);
                REQUIRE(v >= floor);
                if (a + b >= 4 * c.genus) {
                    REQUIRE(h == floor);
                    REQUIRE(v == floor);
                }
                if (e == 1) REQUIRE(h == nu_qinf(b, a, c));
            }
        }
    }
}

TEST_CASE("table invariants") {
    for (const auto& [q, e] : kSmall) {
        const auto c = new_curve(q, e);
        const auto t = build_table(c);
        CAPTURE(q);
        CAPTURE(e);
        for (Int a = 0; a <= t.delta(); ++a) {
            REQUIRE(t.at(a, t.delta() - a) == t.delta() - 2 * c.genus + 2);
            for (Int b = 0; a + b <= t.delta(); ++b) {
                REQUIRE(t.at(a, b) >= c.goppa(a + b));
                if (a + b < t.delta()) {
                    // differ implies witness
                    if (t.dim_code_at(a, b) != t.dim_code_at(a + 1, b)) REQUIRE(nu_q0(a, b, c) >= 1);
                    if (t.dim_code_at(a, b) != t.dim_code_at(a, b + 1)) REQUIRE(nu_qinf(a, b, c) >= 1);
                }
                if (e == 1) REQUIRE(t.at(a, b) == t.at(b, a));
            }
        }
    }
}

TEST_CASE("q=2 e=3 table is symmetric") {
    const auto c = new_curve(2, 3);
    const auto t = build_table(c);
    for (Int a = 0; a <= t.delta(); ++a) {
        for (Int b = 0; a + b <= t.delta(); ++b) REQUIRE(t.at(a, b) == t.at(b, a));
    }
}

TEST_CASE("determinism and explicit delta") {
    const auto c = new_curve(2, 3);
    CHECK(build_table(c) == build_table(c));
    CHECK(build_table(c, 245) == build_table(c));
    const auto small = build_table(c, 0);
    CHECK(small.delta() == 0);
    CHECK(small.at(0, 0) == c.goppa(0));
    CHECK_THROWS_AS(build_table(c, -1), std::invalid_argument);
    CHECK_THROWS_AS((void)small.at(1, 0), std::out_of_range);
}

TEST_CASE("bound lookup with Goppa fallback") {
    const auto c = new_curve(2, 3);
    const auto t = build_table(c, 60);
    CHECK(bound({28, 7}, t, c) == 18);
    CHECK(bound({50, 11}, t, c) == c.goppa(61));
    CHECK(bound({400, 0}, t, c) == 400 - 18);
    CHECK_THROWS_AS(bound({-1, 3}, t, c), std::invalid_argument);
}

TEST_CASE("best codes") {
    const auto c = new_curve(2, 3);
    const auto t = build_table(c);
    const auto best = best_codes_per_dimension(c, t);
    REQUIRE_FALSE(best.empty());
    CHECK(best.front().k == 1);
    CHECK(best.back().k == c.n - 1);
    for (std::size_t i = 0; i < best.size(); ++i) {
        const auto& row = best[i];
        CHECK(row.d_2p >= row.d_1p);
        CHECK(t.at(row.divisor.a1, row.divisor.a2) == row.d_2p);
        CHECK(c.n - dim_code(row.divisor, c) == row.k);
        if (i > 0) CHECK(best[i - 1].k < row.k);
    }
    const auto find = [&](Int k) { return *std::find_if(best.begin(), best.end(), [k](const BestCode& b) { return b.k == k; }); };
    CHECK(find(197).d_2p == 18);
    CHECK(find(197).d_1p == 17);
    CHECK(find(1).d_2p == 223);
    CHECK(find(1).d_1p == 220);
    CHECK(find(204).d_2p == 12);
    CHECK(find(204).d_1p == 12);

    const auto rec = best_codes_per_dimension(c, t, OnePointRule::AxisRecursion);
    REQUIRE(rec.size() == best.size());
    for (std::size_t i = 0; i < rec.size(); ++i) {
        CHECK(rec[i].d_2p == best[i].d_2p);
        CHECK(rec[i].d_2p >= rec[i].d_1p);
    }
}

TEST_CASE("axis recursion") {
    const auto c = new_curve(2, 1);
    const auto along = axis_recursion(c, 20, Place::Q0);
    REQUIRE(along.size() == 21);
    CHECK(along.back() == c.goppa(20));
    for (Int i = 0; i <= 20; ++i) CHECK(along[i] >= c.goppa(i));
    CHECK(axis_recursion(c, 20, Place::Qinf) == along);  // Hermitian symmetry
    CHECK_THROWS_AS(axis_recursion(c, -1, Place::Q0), std::invalid_argument);
}

}
