#include <doctest.h>

#include <algorithm>

#include "superchar/weyl.hpp"

using namespace superchar;

namespace {

LaurentCharacter lc(int rank, std::vector<std::pair<std::vector<long long>, long>> terms) {
    LaurentCharacter c;
    c.rank = rank;
    for (auto& [e, v] : terms) c.terms.emplace(e, v);
    return c;
}

// Apply a signed permutation to every exponent vector and compare.
bool invariant_under(const LaurentCharacter& ch, const std::vector<int>& perm,
                     const std::vector<int>& signs) {
    std::map<std::vector<long long>, Int> moved;
    for (auto& [e, c] : ch.terms) {
        std::vector<long long> f(e.size());
        for (size_t i = 0; i < e.size(); ++i) f[perm[i]] = signs[i] * e[i];
        moved[f] += c;
    }
    std::erase_if(moved, [](const auto& kv) { return kv.second == 0; });
    return moved == ch.terms;
}

} // namespace

TEST_CASE("small classical characters") {
    RootSystemCase c1{Family::C, 1};
    CHECK(weyl_character(c1, GeneralizedVector({2})) ==
          lc(1, {{{2}, 1}, {{-2}, 1}}));  // y + 1/y

    RootSystemCase d2{Family::D, 2};
    CHECK(weyl_character(d2, GeneralizedVector({2, 0})) ==
          lc(2, {{{2, 0}, 1}, {{-2, 0}, 1}, {{0, 2}, 1}, {{0, -2}, 1}}));

    RootSystemCase b1{Family::B, 1};
    CHECK(weyl_character(b1, GeneralizedVector({0})) == lc(1, {{{0}, 1}}));
    CHECK(weyl_character(b1, GeneralizedVector({1})) ==
          lc(1, {{{1}, 1}, {{-1}, 1}}));  // spin module of so(3)
}

TEST_CASE("weyl dimensions") {
    CHECK(weyl_dimension(RootSystemCase{Family::C, 1}, GeneralizedVector({2})) == 2);
    CHECK(weyl_dimension(RootSystemCase{Family::D, 2}, GeneralizedVector({2, 2})) == 3);
    CHECK(weyl_dimension(RootSystemCase{Family::B, 1}, GeneralizedVector({1})) == 2);
    // dimension equals the character evaluated at the identity
    for (Family f : {Family::B, Family::C, Family::D}) {
        RootSystemCase rs{f, 2};
        for (long a = 0; a <= 4; a += 2)
            for (long b = 0; b <= a; b += 2) {
                GeneralizedVector w({a, b});
                CHECK(weyl_dimension(rs, w) == weyl_character(rs, w).dimension());
            }
    }
}

TEST_CASE("characters are Weyl invariant with unit top term") {
    RootSystemCase c2{Family::C, 2};
    for (auto w : {std::vector<long long>{4, 2}, {6, 0}, {2, 2}}) {
        LaurentCharacter ch = weyl_character(c2, GeneralizedVector(std::vector<long long>(w)));
        CHECK(ch.terms.at(w) == 1);
        CHECK(invariant_under(ch, {1, 0}, {1, 1}));    // swap
        CHECK(invariant_under(ch, {0, 1}, {1, -1}));   // flip last (allowed in C)
        for (auto& [e, c] : ch.terms) CHECK(c > 0);
    }
    RootSystemCase d2{Family::D, 2};
    for (auto w : {std::vector<long long>{3, 1}, {2, -2}, {4, 0}}) {
        LaurentCharacter ch = weyl_character(d2, GeneralizedVector(std::vector<long long>(w)));
        CHECK(ch.terms.at(w) == 1);
        CHECK(invariant_under(ch, {1, 0}, {1, 1}));
        CHECK(invariant_under(ch, {0, 1}, {-1, -1}));  // even sign flip
    }
}

TEST_CASE("O(d) characters") {
    CHECK(o_character(2, Partition({1}), false) == lc(1, {{{2}, 1}, {{-2}, 1}}));
    LaurentCharacter det1 = o_character(1, Partition({1}), true);
    CHECK(det1.terms == lc(0, {{{}, 1}}).terms);
    CHECK(det1.eps_exp == 1);
    LaurentCharacter v3 = o_character(3, Partition({1}), true);
    CHECK(v3.terms == lc(1, {{{2}, 1}, {{0}, 1}, {{-2}, 1}}).terms);
    CHECK(v3.eps_exp == 1);
    // same so(d)-character for the bar partner
    for (int d = 2; d <= 5; ++d) {
        PartitionConstraints c;
        c.col_sum_bound_d = d;
        for (const auto& la : enumerate_partitions(4, c)) {
            LaurentCharacter a = o_character(d, la, false);
            LaurentCharacter b = o_character(d, la.bar(d), false);
            CHECK(a.terms == b.terms);
        }
    }
}

TEST_CASE("Sp(d) characters") {
    CHECK(sp_group_character(2, Partition({1})) == lc(1, {{{2}, 1}, {{-2}, 1}}));
    LaurentCharacter l2 = sp_group_character(4, Partition({1, 1}));
    CHECK(l2.dimension() == 5);
    CHECK(l2.terms.at({2, 2}) == 1);
    CHECK(l2.terms.at({0, 0}) == 1);
    CHECK_THROWS(sp_group_character(2, Partition({1, 1})));
}

TEST_CASE("O(d) dimensions") {
    CHECK(o_dimension(1, Partition()) == 1);
    CHECK(o_dimension(1, Partition({1})) == 1);
    CHECK(o_dimension(2, Partition({1})) == 2);
    CHECK(o_dimension(3, Partition({1})) == 3);
    CHECK(o_dimension(2, Partition({3})) == 2);
    CHECK(o_dimension(4, Partition({1, 1})) == 6);  // Lambda^2 of C^4
}

TEST_CASE("alternant kernels agree") {
    for (Family f : {Family::B, Family::C, Family::D}) {
        RootSystemCase rs{f, 3};
        GeneralizedVector tau({8, 4, 2});
        CHECK(alternant_serial(rs, tau) == alternant_parallel(rs, tau));
    }
}
