#include <doctest.h>

#include <random>

#include "superchar/series.hpp"

using namespace superchar;

namespace {

SeriesShape yz_shape(int m, int n, int cap, bool eps = false) {
    SeriesShape sh;
    sh.m = m;
    sh.n = n;
    sh.cap = cap;
    sh.has_eps = eps;
    return sh;
}

ExpVec ev(const SeriesShape& sh, std::vector<std::pair<int, int>> slots, int eps = 0) {
    ExpVec e(sh.width(), 0);
    e[0] = eps;
    for (auto [s, v] : slots) e[s] = v;
    return e;
}

PowerSeries random_series(const SeriesShape& sh, int terms, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expo(0, 3);
    PowerSeries s(sh);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(sh.width(), 0);
        for (int i = 1 + sh.p; i < sh.width(); ++i) e[i] = expo(rng);
        if (sh.has_eps) e[0] = expo(rng) & 1;
        s.add_term(e, coeff(rng));
    }
    s.normalize();
    return s;
}

} // namespace

TEST_CASE("basic products") {
    SeriesShape sh = yz_shape(1, 1, 2);
    const int y = 1, z = 2;
    PowerSeries onep = one_plus(sh, ev(sh, {{y, 1}}));
    PowerSeries onem = PowerSeries::one(sh) - PowerSeries::monomial(sh, ev(sh, {{y, 1}}));
    PowerSeries expect = PowerSeries::one(sh) - PowerSeries::monomial(sh, ev(sh, {{y, 2}}));
    CHECK(onep * onem == expect);

    SeriesShape sh1 = yz_shape(1, 1, 1);
    PowerSeries sq = one_plus(sh1, ev(sh1, {{y, 1}})) * one_plus(sh1, ev(sh1, {{y, 1}}));
    PowerSeries expect1 = PowerSeries::one(sh1) + PowerSeries::monomial(sh1, ev(sh1, {{y, 1}}), 2);
    CHECK(sq == expect1);

    PowerSeries yz = PowerSeries::monomial(sh, ev(sh, {{y, 1}})) *
                     PowerSeries::monomial(sh, ev(sh, {{z, 1}}));
    CHECK(yz == PowerSeries::monomial(sh, ev(sh, {{y, 1}, {z, 1}})));
}

TEST_CASE("geometric expansion") {
    SeriesShape sh = yz_shape(1, 0, 5);
    PowerSeries g = geometric_expand(sh, ev(sh, {{1, 2}}));
    PowerSeries expect = PowerSeries::one(sh) + PowerSeries::monomial(sh, ev(sh, {{1, 2}})) +
                         PowerSeries::monomial(sh, ev(sh, {{1, 4}}));
    CHECK(g == expect);

    SeriesShape sh2 = yz_shape(1, 1, 2);
    PowerSeries g2 = geometric_expand(sh2, ev(sh2, {{1, 1}, {2, 1}}));
    CHECK(g2 == PowerSeries::one(sh2) + PowerSeries::monomial(sh2, ev(sh2, {{1, 1}, {2, 1}})));

    SeriesShape shx;  // Laurent-only monomial has zero capped degree
    shx.p = 1;
    shx.cap = 4;
    CHECK_THROWS(geometric_expand(shx, ev(shx, {{1, 1}})));
}

TEST_CASE("eps is an order-two sign") {
    SeriesShape sh = yz_shape(1, 0, 2, true);
    PowerSeries g = geometric_expand(sh, ev(sh, {{1, 1}}, 1));  // 1/(1 - eps y)
    PowerSeries expect = PowerSeries::one(sh) + PowerSeries::monomial(sh, ev(sh, {{1, 1}}, 1)) +
                         PowerSeries::monomial(sh, ev(sh, {{1, 2}}, 0));
    CHECK(g == expect);
}

TEST_CASE("truncation coherence") {
    for (unsigned seed = 0; seed < 6; ++seed) {
        SeriesShape lo = yz_shape(2, 1, 3);
        SeriesShape hi = yz_shape(2, 1, 6);
        PowerSeries a6 = random_series(hi, 25, seed * 2 + 1);
        PowerSeries b6 = random_series(hi, 25, seed * 2 + 2);
        PowerSeries a3 = a6.truncated(3), b3 = b6.truncated(3);
        CHECK((a3 * b3) == (a6 * b6).truncated(3));
    }
}

TEST_CASE("serial and parallel kernels agree") {
    for (unsigned seed = 0; seed < 4; ++seed) {
        SeriesShape sh = yz_shape(2, 2, 8);
        sh.p = 1;
        PowerSeries a = random_series(sh, 200, 100 + seed);
        PowerSeries b = random_series(sh, 200, 200 + seed);
        CHECK(series_mul_serial(a, b) == series_mul_parallel(a, b));
    }
}

TEST_CASE("first mismatch reporting") {
    SeriesShape sh = yz_shape(1, 0, 3);
    PowerSeries a = geometric_expand(sh, ev(sh, {{1, 1}}));
    PowerSeries b = a + PowerSeries::monomial(sh, ev(sh, {{1, 2}}));
    auto mm = PowerSeries::first_mismatch(a, b);
    REQUIRE(mm.has_value());
    CHECK(mm->e == ev(sh, {{1, 2}}));
    CHECK(mm->lhs == 1);
    CHECK(mm->rhs == 2);
    CHECK_FALSE(PowerSeries::first_mismatch(a, a).has_value());
}
