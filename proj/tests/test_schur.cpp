#include <doctest.h>

#include "superchar/schur.hpp"

using namespace superchar;

namespace {

SeriesShape shp(int m, int n, int cap) {
    SeriesShape sh;
    sh.m = m;
    sh.n = n;
    sh.cap = cap;
    return sh;
}

} // namespace

TEST_CASE("schur polynomials") {
    SeriesShape sh2 = shp(2, 0, 6);
    PowerSeries s21 = schur_expand(Partition({2, 1}), sh2);
    PowerSeries expect(sh2);
    expect.add_term({0, 2, 1}, 1);
    expect.add_term({0, 1, 2}, 1);
    expect.normalize();
    CHECK(s21 == expect);

    SeriesShape sh3 = shp(3, 0, 6);
    CHECK(schur_expand(Partition({1}), sh3).term_count() == 3);
    CHECK(schur_expand(Partition({1, 1, 1}), sh2).is_zero());
}

TEST_CASE("skew schur") {
    CHECK(skew_schur_monomials(Partition({1}), Partition({1}), 1).at({0}) == 1);
    auto sk = skew_schur_monomials(Partition({2}), Partition({1}), 2);
    CHECK(sk.size() == 2);
    CHECK(sk.at({1, 0}) == 1);
    CHECK(sk.at({0, 1}) == 1);
    auto sk2 = skew_schur_monomials(Partition({2, 1}), Partition({1}), 1);
    CHECK(sk2.size() == 1);
    CHECK(sk2.at({2}) == 1);
    CHECK_THROWS(skew_schur_monomials(Partition({1}), Partition({2}), 1));
}

TEST_CASE("hook schur small values") {
    SeriesShape sh = shp(1, 1, 6);
    PowerSeries hs1 = hook_schur_expand(Partition({1}), sh);
    PowerSeries e1(sh);
    e1.add_term({0, 1, 0}, 1);
    e1.add_term({0, 0, 1}, 1);
    e1.normalize();
    CHECK(hs1 == e1);

    PowerSeries hs2 = hook_schur_expand(Partition({2}), sh);
    PowerSeries e2(sh);
    e2.add_term({0, 2, 0}, 1);
    e2.add_term({0, 1, 1}, 1);
    e2.normalize();
    CHECK(hs2 == e2);

    PowerSeries hs11 = hook_schur_expand(Partition({1, 1}), sh);
    PowerSeries e11(sh);
    e11.add_term({0, 1, 1}, 1);
    e11.add_term({0, 0, 2}, 1);
    e11.normalize();
    CHECK(hs11 == e11);
}

TEST_CASE("hook schur two-path equality and vanishing") {
    for (const auto& la : enumerate_partitions(6)) {
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n)
                CHECK(hook_schur_monomials(la, m, n) == hook_schur_monomials_by_tableaux(la, m, n));
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                CHECK(hook_schur_monomials(la, m, n).empty() == !la.in_hook(m, n));
    }
}

TEST_CASE("hook schur classical limits and specialization count") {
    for (const auto& la : enumerate_partitions(5)) {
        SeriesShape me = shp(2, 0, 5);
        CHECK(hook_schur_expand(la, me) == schur_expand(la, me));
        SeriesShape ne = shp(0, 2, 5);
        CHECK(hook_schur_expand(la, ne) == schur_expand(la.conjugate(), ne, 'z'));
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                SeriesShape sh = shp(m, n, 5);
                CHECK(hook_schur_expand(la, sh).eval_all_ones() ==
                      Int(static_cast<long>(enumerate_hook_tableaux(la, m, n).size())));
            }
    }
}

TEST_CASE("omega involution") {
    SchurExpansion e;
    e.add(Partition({2}), 1);
    SchurExpansion w = e.omega();
    CHECK(w.terms.size() == 1);
    CHECK(w.terms.at(Partition({1, 1})) == 1);

    SchurExpansion id;
    id.add(Partition(), 1);
    CHECK(id.omega() == id);

    SchurExpansion sc;
    sc.add(Partition({2, 1}), -1);
    CHECK(sc.omega() == sc);
}

TEST_CASE("littlewood identities: even rows vs even columns") {
    // prod_{l<=k} 1/(1-z_l z_k) = sum over even-row partitions of s_la;
    // prod_{l<k} likewise over even-column partitions.
    for (int n = 2; n <= 3; ++n) {
        SeriesShape sh = shp(0, n, 6);
        PowerSeries all = PowerSeries::one(sh);
        PowerSeries strict = PowerSeries::one(sh);
        for (int l = 0; l < n; ++l)
            for (int k = l; k < n; ++k) {
                ExpVec e(sh.width(), 0);
                e[1 + l] += 1;
                e[1 + k] += 1;
                PowerSeries g = geometric_expand(sh, e);
                all = all * g;
                if (k > l) strict = strict * g;
            }
        PowerSeries rows(sh), cols(sh);
        PartitionConstraints er, ec;
        er.even_rows = true;
        ec.even_cols = true;
        for (const auto& la : enumerate_partitions(6, er)) rows += schur_expand(la, sh, 'z');
        for (const auto& la : enumerate_partitions(6, ec)) cols += schur_expand(la, sh, 'z');
        CHECK(all == rows);
        CHECK(strict == cols);
    }
}
