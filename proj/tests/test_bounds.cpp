#include "doctest.h"

#include "oracles.hpp"
#include "wg/bounds.hpp"

using namespace wg;

TEST_CASE("Catalan numbers and the shortest-path product") {
    const std::vector<long> cat = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n < static_cast<int>(cat.size()); ++n) CHECK(catalan(n) == cat[static_cast<std::size_t>(n)]);
    for (int n = 0; n <= 15; ++n) CHECK(catalan(n) == oracle::catalan_by_recursion(n));
    const auto z = Permutation::parse("4,1,5,3,2");
    CHECK(shortest_count(GraphKind::Unitary, z) == 14);
    CHECK(moebius(z) == 14);
    CHECK(moebius(Permutation::parse("2,1")) == -1);
    CHECK(shortest_count(GraphKind::Orthogonal, coset_representative(IntegerPartition({2, 1}))) == 1);
    CHECK(catalan_product(IntegerPartition({3, 2})) == 2);
}

TEST_CASE("property: Catalan oracle against path counts") {
    for (int k = 1; k <= 5; ++k) {
        for (const auto& mu : partitions_of(k)) {
            const auto s = class_representative(mu);
            CHECK(count_paths(GraphKind::Unitary, s, length_stat(s)) == catalan_product(mu));
        }
    }
    for (int k = 1; k <= 4; ++k) {
        for (const auto& mu : partitions_of(k)) {
            const auto m = coset_representative(mu);
            CHECK(count_paths(GraphKind::Orthogonal, m, length_stat(m)) == catalan_product(mu));
        }
    }
}

TEST_CASE("unitary combinatorial bounds") {
    const auto small = certify_unitary_bounds(2, 1);
    CHECK(small.passed());
    for (int k = 1; k <= 4; ++k) CHECK(certify_unitary_bounds(k, 3).passed());
    const auto one = certify_unitary_bounds(1, 2);
    CHECK(one.passed());
    REQUIRE_FALSE(one.instances.empty());
    CHECK(one.instances.front().value == 1);
}

TEST_CASE("unitary ratio bounds") {
    CHECK(unitary_ratio_threshold(1) == 3);
    CHECK(unitary_ratio_threshold(2) == 9);
    CHECK(unitary_ratio_threshold(3) == 17);
    const auto rep = certify_wg_ratio_unitary(2, 10);
    CHECK(rep.passed());
    bool tight = false;
    for (const auto& inst : rep.instances) {
        if (inst.class_key == "2") {
            CHECK(inst.value == ratio(100, 99));
            REQUIRE(inst.lower_ratio.has_value());
            tight = *inst.lower_ratio == 1;
        }
        if (inst.class_key == "1+1") CHECK(inst.value == ratio(100, 99));
    }
    CHECK(tight);
    CHECK(certify_wg_ratio_unitary(3, 9).passed());
    CHECK(certify_wg_ratio_unitary(3, 17).passed());
    CHECK_THROWS_AS(certify_wg_ratio_unitary(3, 2), DomainError);
}

TEST_CASE("orthogonal bounds") {
    CHECK(certify_orthogonal_bounds(1, 2).passed());
    CHECK(certify_orthogonal_bounds(2, 1).passed());
    CHECK(certify_orthogonal_bounds(3, 2).passed());
    CHECK(sp_ratio_threshold(1) == 7);
    CHECK(sp_ratio_threshold(2) == 68);
    CHECK(sp_ratio_threshold(3) == 281);
    CHECK(orthogonal_ratio_threshold(1) == 13);
    CHECK(orthogonal_ratio_threshold(2) == 136);
    CHECK(orthogonal_ratio_threshold(3) == 562);
    CHECK(certify_sp_ratio(2, 68).passed());
    CHECK(certify_orthogonal_ratio(2, 136).passed());
    CHECK_THROWS_AS(certify_sp_ratio(2, 67), DomainError);
    CHECK_THROWS_AS(certify_orthogonal_ratio(2, 135), DomainError);
}

TEST_CASE("neighbourhood and injection") {
    for (int k = 1; k <= 4; ++k) {
        CHECK(certify_neighborhood(k).passed());
        CHECK(certify_injection(k, 4).passed());
    }
}

TEST_CASE("Dyck paths") {
    const auto p22 = dyck_paths({2, 2});
    REQUIRE(p22.size() == 1);
    CHECK(dyck_area(p22[0]) == 2);
    CHECK(dyck_paths({4}).size() == 2);
    CHECK(dyck_paths({3}).empty());
    CHECK(dyck_area({1, -1, 1, -1}) == 2);
    // mu = (3,3): I = (2,2) contains (+1,-1,+1,-1).
    CHECK(dyck_area_sum(IntegerPartition({3, 3})) == 2);

    for (int k = 1; k <= 4; ++k) {
        std::vector<int> ones(static_cast<std::size_t>(k), 1);
        const auto c = compare_dyck_area(IntegerPartition(ones));
        CHECK(c.area_sum == 0);
        CHECK(c.direct == 0);
        CHECK(c.agrees());
    }
    const auto two = compare_dyck_area(IntegerPartition({2}));
    CHECK(two.area_sum == 0);
    CHECK(two.direct == 1);
    CHECK_FALSE(two.agrees());
    CHECK(two.doubled_length_sum == 1);
    CHECK(count_paths(GraphKind::Orthogonal, PairPartition::parse("1,3|2,4"), 2) == two.direct);
}
