#include <doctest.h>

#include "ggk/riemann_roch.hpp"
#include "oracles.hpp"

using namespace ggk;
using ggk::testing::brute_tau;

namespace {

// l(G) counted from the brute-force tau, no shortcuts.
Int brute_dim_l(TwoPointDivisor d, const CurveParams& c) {
    Int count = 0;
    for (Int i = -d.a2; i <= d.a1; ++i) count += brute_tau(i, c) <= d.a2 ? 1 : 0;
    return count;
}

}  // namespace

TEST_SUITE("riemann_roch") {

TEST_CASE("l(G) examples on the q=2 e=3 curve") {
    const auto c = new_curve(2, 3);
    CHECK(dim_l({0, 0}, c) == 1);
    CHECK(dim_l({-1, 0}, c) == 0);
    CHECK(dim_l({9, 0}, c) == 4);  // 0, 6, 8, 9
    CHECK(dim_l({19, 0}, c) == 10);
    CHECK(dim_l({0, 19}, c) == 10);
    CHECK(dim_l({-5, 3}, c) == 0);
}

TEST_CASE("code dimension examples") {
    const auto c = new_curve(2, 3);
    CHECK(dim_code({0, 0}, c) == 1);
    CHECK(dim_code({28, 7}, c) == 26);
    CHECK(dim_code({231, 0}, c) == 220);
    CHECK(dim_code({1000, 0}, c) == c.n);
}

TEST_CASE("l(G) agrees with the brute-force count") {
    for (const auto& [q, e] : std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {2, 3}}) {
        const auto c = new_curve(q, e);
        const Int span = 2 * c.genus + c.gen_x + 3;
        for (Int a1 = -span; a1 <= span; ++a1) {
            for (Int a2 = -span; a2 <= span; ++a2) REQUIRE(dim_l({a1, a2}, c) == brute_dim_l({a1, a2}, c));
        }
    }
}

TEST_CASE("Riemann-Roch and unit steps") {
    for (const auto& [q, e] : std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {2, 3}, {3, 3}, {2, 5}}) {
        const auto c = new_curve(q, e);
        CAPTURE(q);
        CAPTURE(e);
        const Int span = 3 * c.genus + 5;
        for (Int a1 = -span; a1 <= span; ++a1) {
            for (Int a2 = -span; a2 <= span; ++a2) {
                const TwoPointDivisor d{a1, a2};
                const Int l = dim_l(d, c);
                if (d.degree() < 0) REQUIRE(l == 0);
                if (d.degree() >= 2 * c.genus - 1) REQUIRE(l == d.degree() + 1 - c.genus);
                REQUIRE(l >= d.degree() + 1 - c.genus);
                const Int up0 = dim_l(d + TwoPointDivisor{1, 0}, c) - l;
                const Int up1 = dim_l(d + TwoPointDivisor{0, 1}, c) - l;
                REQUIRE((up0 == 0 || up0 == 1));
                REQUIRE((up1 == 0 || up1 == 1));
            }
        }
    }
}

TEST_CASE("code dimension properties") {
    for (const auto& [q, e] : std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {2, 3}}) {
        const auto c = new_curve(q, e);
        const Int top = c.n_places + 2 * c.genus;
        for (Int a = 0; a <= top; ++a) {
            for (Int b = 0; a + b <= top; ++b) {
                const TwoPointDivisor d{a, b};
                const Int k = dim_code(d, c);
                REQUIRE(k >= 0);
                REQUIRE(k <= c.n);
                REQUIRE(k <= dim_l(d, c));
                if (d.degree() < c.n) REQUIRE(k == dim_l(d, c));
                if (d.degree() > 2 * c.genus - 2 && d.degree() < c.n) REQUIRE(k == d.degree() + 1 - c.genus);
                if (d.degree() > c.n + 2 * c.genus - 2) REQUIRE(k == c.n);
                for (const Place p : {Place::Q0, Place::Qinf}) {
                    const auto next = d + (p == Place::Q0 ? TwoPointDivisor{1, 0} : TwoPointDivisor{0, 1});
                    const Int step = dim_code(next, c) - k;
                    REQUIRE((step == 0 || step == 1));
                    REQUIRE(codes_equal_after_adding(d, p, c) == (step == 0));
                }
            }
        }
    }
}

TEST_CASE("monomial basis") {
    const auto gk = new_curve(2, 3);
    const auto basis = basis_exponents({9, 0}, gk);
    REQUIRE(basis.size() == 4);
    // pole orders 0, 6, 8, 9 at Q0; 9 is x^-1, admitted because tau(9) <= 0
    CHECK(pole_order_q0(basis.back(), gk) == 9);
    CHECK(basis.back() == PoleTriple{-1, 0, 0});
    CHECK(tau(9, gk) == -9);

    const auto h = new_curve(2, 1);
    const auto hb = basis_exponents({3, 0}, h);
    CHECK(hb.size() == 3);  // 1, pole orders 2 and 3

    for (const auto& [q, e] : std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {2, 3}}) {
        const auto c = new_curve(q, e);
        for (Int a1 = -5; a1 <= 3 * c.genus; a1 += 2) {
            for (Int a2 = -5; a2 <= 3 * c.genus; a2 += 3) {
                const auto b = basis_exponents({a1, a2}, c);
                REQUIRE(static_cast<Int>(b.size()) == dim_l({a1, a2}, c));
                Int prev = -a2 - 1;
                for (const auto& t : b) {
                    const Int i = pole_order_q0(t, c);
                    REQUIRE(i > prev);
                    REQUIRE(i <= a1);
                    REQUIRE(pole_order_qinf(t, c) <= a2);
                    prev = i;
                }
            }
        }
    }
}

}
