#include <doctest.h>

#include "superchar/partition.hpp"

using namespace superchar;

TEST_CASE("conjugate") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    for (const auto& p : enumerate_partitions(6)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
    }
}

TEST_CASE("in_hook") {
    CHECK_FALSE(Partition({3, 3}).in_hook(1, 2));
    CHECK(Partition({3, 3}).in_hook(2, 0));
    CHECK(Partition({1, 1, 1}).in_hook(0, 1));
}

TEST_CASE("bar") {
    CHECK(Partition({1}).bar(3) == Partition({1, 1}));
    CHECK(Partition().bar(2) == Partition({1, 1}));
    CHECK(Partition({2, 1, 1}).bar(4) == Partition({2}));
    CHECK(Partition({2}).bar(4) == Partition({2, 1, 1}));
    // involution on the admissible range
    for (int d = 1; d <= 5; ++d) {
        PartitionConstraints c;
        c.col_sum_bound_d = d;
        for (const auto& p : enumerate_partitions(6, c)) CHECK(p.bar(d).bar(d) == p);
    }
    CHECK_THROWS(Partition({2, 2}).bar(3));
}

TEST_CASE("enumerate_partitions") {
    PartitionConstraints c1;
    c1.col_sum_bound_d = 1;
    CHECK(enumerate_partitions(2, c1) == std::vector<Partition>{Partition(), Partition({1})});

    PartitionConstraints c2;
    c2.even_rows = true;
    c2.hook = std::make_pair(1, 0);
    CHECK(enumerate_partitions(4, c2) ==
          std::vector<Partition>{Partition(), Partition({2}), Partition({4})});

    PartitionConstraints c3;
    c3.max_length = 0;
    CHECK(enumerate_partitions(2, c3) == std::vector<Partition>{Partition()});
}

TEST_CASE("hook tableaux small") {
    CHECK(enumerate_hook_tableaux(Partition({2}), 1, 1).size() == 2);
    CHECK(enumerate_hook_tableaux(Partition({1, 1}), 1, 1).size() == 2);
    CHECK(enumerate_hook_tableaux(Partition({2, 2}), 0, 1).empty());
}

TEST_CASE("hook tableaux counts: classical limit and transpose duality") {
    for (const auto& la : enumerate_partitions(5))
        for (int m = 0; m <= 3; ++m) {
            CHECK(Int(static_cast<long>(enumerate_hook_tableaux(la, m, 0).size())) ==
                  ssyt_count(la, m));
            for (int n = 0; n <= 3; ++n)
                CHECK(enumerate_hook_tableaux(la, m, n).size() ==
                      enumerate_hook_tableaux(la.conjugate(), n, m).size());
        }
}

TEST_CASE("glmn labels") {
    CHECK(glmn_labels(Partition({2, 1}), 1, 1) == std::vector<int>{2, 1});
    CHECK(glmn_labels(Partition({1}), 2, 1) == std::vector<int>{1, 0, 0});
    CHECK(glmn_labels(Partition(), 1, 2) == std::vector<int>{0, 0, 0});
}

TEST_CASE("dynkin labels") {
    // spo: (-mu_1, mu_1-mu_2, mu_2+mu_3, mu_3-mu_4) for (m,n) = (2,2)
    auto mu = GeneralizedVector::from_ints({2, 1, 1, 0});
    CHECK(dynkin_labels(mu, 2, 2, SuperKind::spo) ==
          std::vector<long long>{-4, 2, 4, 2});
    CHECK(dynkin_labels(mu, 2, 2, SuperKind::osp) ==
          std::vector<long long>{-6, 2, 4, 2});
    auto zero = GeneralizedVector::from_ints({0, 0, 0, 0});
    CHECK(dynkin_labels(zero, 2, 2, SuperKind::spo) == std::vector<long long>{0, 0, 0, 0});

    // first label on lambda + d/2 is -lambda_1 - d/2 (doubled: -2 la_1 - d)
    for (int d = 1; d <= 4; ++d) {
        std::vector<long long> t = {2 * 3 + d, 2 * 1 + d, -d, -d};
        auto lab = dynkin_labels(GeneralizedVector(t), 2, 2, SuperKind::spo);
        CHECK(lab[0] == -(2 * 3 + d));
    }
}

TEST_CASE("generalized vector parity invariant") {
    CHECK_THROWS(GeneralizedVector({2, 1}));
    CHECK(GeneralizedVector({3, 1, -1}).is_integral() == false);
    CHECK(GeneralizedVector({2, 0}).is_integral());
}
