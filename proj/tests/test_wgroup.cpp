#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "superchar/wgroup.hpp"

using namespace superchar;

namespace {

std::vector<int> range_set(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

} // namespace

TEST_CASE("closed index sets, frozen cases") {
    auto a = closed_index_set(Partition(), 2, 4, PairKind::OSp);
    CHECK(a.I == std::vector<int>{2, 3, 4});
    CHECK_FALSE(a.full);

    auto b = closed_index_set(Partition({1}), 2, 4, PairKind::OSp);
    CHECK(b.I == std::vector<int>{3, 4});
    CHECK(b.full);

    auto c = closed_index_set(Partition({1}), 2, 5, PairKind::SpO);
    CHECK(c.I == std::vector<int>{2, 3, 5});
    CHECK_FALSE(c.full);

    // With three so-variables the pairing (1,3) removes both partners and the
    // zero entry at 2 is left without a companion: the group is trivial.
    auto e = closed_index_set(Partition(), 2, 3, PairKind::SpO);
    CHECK(e.I.empty());
    auto e5 = closed_index_set(Partition(), 2, 5, PairKind::SpO);
    CHECK(e5.I == std::vector<int>{2, 4, 5});

    // d = 1: no cancelling partner exists for mu_1 = 1/2, so every index
    // participates (the generic case formula would wrongly drop index 2).
    auto f = closed_index_set(Partition({1}), 1, 5, PairKind::OSp);
    CHECK(f.I == range_set(1, 5));

    auto g = closed_index_set(Partition({2, 2, 1}), 5, 8, PairKind::OSp);
    CHECK(g.I == std::vector<int>{3, 4, 7, 8});
    CHECK_FALSE(g.full);
}

TEST_CASE("trivial weight index sets match the explicit description") {
    const int m = 9;
    for (int d = 1; d <= 5; ++d) {
        auto spec = closed_index_set(Partition(), d, m, PairKind::OSp);
        CHECK(spec.I == range_set(d, m));
        CHECK_FALSE(spec.full);
    }
    for (int d = 2; d <= 4; d += 2) {
        auto spec = closed_index_set(Partition(), d, m, PairKind::SpO);
        std::vector<int> expect{d / 2 + 1};
        for (int i = d + 2; i <= m; ++i) expect.push_back(i);
        CHECK(spec.I == expect);
        CHECK_FALSE(spec.full);
    }
}

TEST_CASE("bruteforce oracle equals the closed form") {
    const int m = 8;
    for (int d = 1; d <= 4; ++d)
        for (const auto& la : enumerate_partitions(4)) {
            Partition conj = la.conjugate();
            if (conj.row(0) + conj.row(1) <= d)
                CHECK(closed_index_set(la, d, m, PairKind::OSp) ==
                      bruteforce_wlambda(la, d, m, PairKind::OSp));
            if (d % 2 == 0 && la.length() <= d / 2)
                CHECK(closed_index_set(la, d, m, PairKind::SpO) ==
                      bruteforce_wlambda(la, d, m, PairKind::SpO));
        }
}

TEST_CASE("coset enumeration") {
    SignGroupSpec even{PairKind::OSp, 2, 4, Partition(), {2, 3}, false};
    auto ce = coset_elements(even);
    REQUIRE(ce.size() == 2);
    CHECK(ce[0].flips.empty());
    CHECK(ce[0].sign == 1);
    CHECK(ce[1].flips == std::vector<int>{2, 3});

    SignGroupSpec full{PairKind::OSp, 2, 4, Partition({1}), {3, 4}, true};
    CHECK(coset_elements(full).size() == 4);

    SignGroupSpec none{PairKind::OSp, 2, 4, Partition(), {}, false};
    REQUIRE(coset_elements(none).size() == 1);
    CHECK(coset_elements(none)[0].sign == 1);
}

TEST_CASE("lambda_w frozen values") {
    auto [l0, s0] = lambda_w(Partition({2}), 2, 3, {}, PairKind::OSp);
    CHECK(l0 == Partition({2}));
    CHECK(s0 == 1);

    auto [l1, s1] = lambda_w(Partition(), 3, 4, {3, 4}, PairKind::OSp);
    CHECK(l1 == Partition({2, 2, 2, 2}));
    CHECK(s1 == -1);

    auto [l2, s2] = lambda_w(Partition(), 1, 2, {1, 2}, PairKind::OSp);
    CHECK(l2 == Partition({2, 2}));
    CHECK(s2 == -1);
}

TEST_CASE("trivial-weight signs follow (-1)^{l + sum of flipped indices}") {
    for (PairKind pair : {PairKind::OSp, PairKind::SpO}) {
        for (int d = 1; d <= 3; ++d) {
            if (pair == PairKind::SpO && d % 2 != 0) continue;
            auto spec = closed_index_set(Partition(), d, 6, pair);
            for (const auto& w : coset_elements(spec)) {
                long s = static_cast<long>(w.flips.size());
                for (int i : w.flips) s += i;
                CHECK(w.sign == (s % 2 == 0 ? 1 : -1));
            }
        }
    }
}

TEST_CASE("structure of the Enright weight along the index set") {
    for (PairKind pair : {PairKind::OSp, PairKind::SpO})
        for (int d = 1; d <= 5; ++d)
            for (const auto& la : enumerate_partitions(5)) {
                if (pair == PairKind::SpO && (d % 2 != 0 || la.length() > d / 2)) continue;
                Partition conj = la.conjugate();
                if (pair == PairKind::OSp && conj.row(0) + conj.row(1) > d) continue;
                const int m = 7;
                auto spec = closed_index_set(la, d, m, pair);
                auto mu = enright_mu_twice(la, d, m, pair);
                // absolute values pairwise distinct along I
                std::set<long long> seen;
                for (int i : spec.I) CHECK(seen.insert(std::llabs(mu[i - 1])).second);
                // flipped weights have pairwise distinct entries
                for (const auto& w : coset_elements(spec)) {
                    auto tw = mu;
                    for (int f : w.flips) tw[f - 1] = -tw[f - 1];
                    std::sort(tw.begin(), tw.end());
                    CHECK(std::adjacent_find(tw.begin(), tw.end()) == tw.end());
                }
                // nesting in the rank
                auto bigger = closed_index_set(la, d, m + 1, pair);
                CHECK(std::includes(bigger.I.begin(), bigger.I.end(), spec.I.begin(),
                                    spec.I.end()));
                // Lambda_w is a partition containing at least |la| cells,
                // with equality only at the identity coset
                for (const auto& w : coset_elements(spec)) {
                    auto [shape, sign] = lambda_w(la, d, m, w.flips, pair);
                    (void)sign;
                    if (w.flips.empty()) CHECK(shape == la);
                    else CHECK(shape.size() > la.size());
                    // containment: every correction shape dominates lambda
                    CHECK(shape.contains(la));
                }
            }
}
