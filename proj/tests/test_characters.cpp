#include <doctest.h>

#include "superchar/characters.hpp"

using namespace superchar;

namespace {

PowerSeries from_terms(const SeriesShape& sh, std::vector<std::pair<ExpVec, long>> terms) {
    PowerSeries s(sh);
    for (auto& [e, c] : terms) s.add_term(e, c);
    s.normalize();
    return s;
}

} // namespace

TEST_CASE("enright schur sums") {
    SchurExpansion a = enright_schur_sum(Partition({2}), 2, 1, PairKind::OSp);
    CHECK(a.terms == std::map<Partition, Int>{{Partition({2}), 1}});

    SchurExpansion b = enright_schur_sum(Partition(), 1, 2, PairKind::OSp);
    CHECK(b.terms == std::map<Partition, Int>{{Partition(), 1}, {Partition({2, 2}), -1}});

    // at rank 3 the so-side trivial weight has a trivial coset group
    SchurExpansion c = enright_schur_sum(Partition(), 2, 3, PairKind::SpO);
    CHECK(c.terms == std::map<Partition, Int>{{Partition(), 1}});

    // ground truth for sp(4): odd polynomials in two variables
    SchurExpansion d = enright_schur_sum(Partition({1}), 1, 2, PairKind::OSp);
    CHECK(d.terms == std::map<Partition, Int>{{Partition({1}), 1}, {Partition({2, 1}), -1}});

    // identity coset always contributes lambda with +1
    for (int dd = 1; dd <= 4; ++dd)
        for (const auto& la : enumerate_partitions(4)) {
            Partition conj = la.conjugate();
            if (conj.row(0) + conj.row(1) > dd) continue;
            CHECK(enright_schur_sum(la, dd, 3, PairKind::OSp).terms.at(la) == 1);
        }
}

TEST_CASE("classical unitary characters") {
    CharacterResult r = classical_unitary_character(Partition(), 1, 1, PairKind::OSp, 6);
    SeriesShape sh = classical_shape(PairKind::OSp, 1, 6);
    CHECK(r.series == from_terms(sh, {{{0, 0}, 1}, {{0, 2}, 1}, {{0, 4}, 1}, {{0, 6}, 1}}));

    CharacterResult r2 = classical_unitary_character(Partition({1}), 2, 1, PairKind::SpO, 2);
    SeriesShape sh2 = classical_shape(PairKind::SpO, 1, 2);
    CHECK(r2.series == from_terms(sh2, {{{0, 1}, 1}}));

    CharacterResult r3 = classical_unitary_character(Partition(), 3, 0, PairKind::OSp, 4);
    CHECK(r3.series == PowerSeries::one(classical_shape(PairKind::OSp, 0, 4)));
}

TEST_CASE("hs_series basics") {
    HsSeries a = hs_series(Partition(), 1, 1, 0, 6, PairKind::OSp);
    CHECK(a.series == PowerSeries::one(super_shape(PairKind::OSp, 1, 0, 6)));

    HsSeries b = hs_series(Partition(), 1, 1, 1, 3, PairKind::OSp);
    CHECK(b.series == PowerSeries::one(super_shape(PairKind::OSp, 1, 1, 3)));

    // one rank beyond the bound gives the same truncation
    HsSeries c0 = hs_series(Partition({1}), 1, 2, 1, 5, PairKind::OSp);
    HsSeries c1 = hs_series(Partition({1}), 1, 2, 1, 5, PairKind::OSp, c0.rank_used + 1);
    CHECK(c0.series == c1.series);

    // identity coefficient
    CHECK(hs_series(Partition({2}), 2, 2, 2, 5, PairKind::OSp).parts.terms.at(Partition({2})) ==
          1);

    // a diagram outside the hook expands to zero
    HsSeries z = hs_series(Partition({2, 2}), 4, 1, 1, 6, PairKind::OSp);
    CHECK(z.series.is_zero());
    CHECK(z.parts.terms.empty());
}

TEST_CASE("spo character examples") {
    CharacterResult r = spo_character(Partition(), 1, 1, 1, 4);
    SeriesShape sh = super_shape(PairKind::OSp, 1, 1, 4);
    CHECK(r.series == from_terms(sh, {{{0, 0, 0}, 1},
                                      {{0, 2, 0}, 1},
                                      {{0, 1, 1}, 1},
                                      {{0, 4, 0}, 1},
                                      {{0, 3, 1}, 1}}));
    CHECK_FALSE(r.combined);

    CharacterResult even = spo_character(Partition(), 2, 2, 1, 3);
    CHECK(even.combined);  // pair with bar = (1,1), inside the (2|1)-hook

    CharacterResult bar_out = spo_character(Partition(), 2, 1, 0, 4);
    CHECK_FALSE(bar_out.combined);  // bar = (1,1) misses the (1|0)-hook
    SeriesShape sh10 = super_shape(PairKind::OSp, 1, 0, 4);
    CHECK(bar_out.series == from_terms(sh10, {{{0, 0}, 1}, {{0, 2}, 1}, {{0, 4}, 1}}));
}

TEST_CASE("osp character example") {
    CharacterResult r = osp_character(Partition({1}), 2, 1, 1, 2);
    SeriesShape sh = super_shape(PairKind::SpO, 1, 1, 2);
    CHECK(r.series == from_terms(sh, {{{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
}

TEST_CASE("n = 0 degeneration to the classical character") {
    for (int d = 1; d <= 3; ++d)
        for (const auto& la : enumerate_partitions(3)) {
            Partition conj = la.conjugate();
            if (conj.row(0) + conj.row(1) > d || !la.in_hook(2, 0)) continue;
            if (d % 2 == 0 && la.bar(d) != la && la.bar(d).in_hook(2, 0)) continue;
            CharacterResult super = spo_character(la, d, 2, 0, 5);
            CharacterResult classic = classical_unitary_character(la, d, 2, PairKind::OSp, 5);
            CHECK(super.series == classic.series);
        }
}

TEST_CASE("trivial hs tuples") {
    HsSeries a = trivial_hs(PairKind::OSp, 1, 1, 0, 6);
    CHECK(a.parts.terms == std::map<Partition, Int>{{Partition(), 1}});

    // first correction shape for d = 3 comes from the tuple (3,4)
    HsSeries b = trivial_hs(PairKind::OSp, 3, 3, 3, 8);
    CHECK(b.parts.terms.at(Partition({2, 2, 2, 2})) == -1);
    auto [shape, sign] = lambda_w(Partition(), 3, 4, {3, 4}, PairKind::OSp);
    CHECK(shape == Partition({2, 2, 2, 2}));
    CHECK(sign == -1);

    // so-side tuple (4,5) at d = 2 instantiates nu_J = (2,2,2,2)
    HsSeries c = trivial_hs(PairKind::SpO, 2, 3, 3, 8);
    CHECK(c.parts.terms.at(Partition({2, 2, 2, 2})) == 1);
    auto [shape2, sign2] = lambda_w(Partition(), 2, 5, {4, 5}, PairKind::SpO);
    CHECK(shape2 == Partition({2, 2, 2, 2}));
    CHECK(sign2 == 1);
}

TEST_CASE("trivial hs equals the coset expansion") {
    for (int d : {1, 2, 3})
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                HsSeries a = trivial_hs(PairKind::OSp, d, m, n, 6);
                HsSeries b = hs_series(Partition(), d, m, n, 6, PairKind::OSp);
                CHECK(a.parts.terms == b.parts.terms);
                CHECK(a.series == b.series);
            }
    for (int d : {2, 4})
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                HsSeries a = trivial_hs(PairKind::SpO, d, m, n, 6);
                HsSeries b = hs_series(Partition(), d, m, n, 6, PairKind::SpO);
                CHECK(a.parts.terms == b.parts.terms);
                CHECK(a.series == b.series);
            }
}

TEST_CASE("invariants character examples") {
    PowerSeries a = invariants_character(InvariantGroup::O, 1, 1, 0, 6);
    SeriesShape sh = super_shape(PairKind::OSp, 1, 0, 6);
    CHECK(a == from_terms(sh, {{{0, 0}, 1}, {{0, 2}, 1}, {{0, 4}, 1}, {{0, 6}, 1}}));

    PowerSeries b = invariants_character(InvariantGroup::Sp, 2, 0, 1, 4);
    SeriesShape sh2 = super_shape(PairKind::SpO, 0, 1, 4);
    CHECK(b == from_terms(sh2, {{{0, 0}, 1}, {{0, 2}, 1}}));

    PowerSeries c = invariants_character(InvariantGroup::O, 3, 0, 0, 5);
    CHECK(c == PowerSeries::one(super_shape(PairKind::OSp, 0, 0, 5)));
}

TEST_CASE("character coefficients are non-negative") {
    for (int d = 1; d <= 3; ++d)
        for (const auto& la : enumerate_partitions(3)) {
            Partition conj = la.conjugate();
            if (conj.row(0) + conj.row(1) > d || !la.in_hook(2, 1)) continue;
            CHECK_NOTHROW(spo_character(la, d, 2, 1, 4));
        }
    for (int d : {2, 4})
        for (const auto& la : enumerate_partitions(3)) {
            if (la.length() > d / 2 || !la.in_hook(2, 1)) continue;
            CHECK_NOTHROW(osp_character(la, d, 2, 1, 4));
        }
}
