#include <doctest.h>

#include <set>

#include "gradind/partitions.hpp"

using namespace gradind;

namespace {

SetPartition sp(int N, std::vector<Block> blocks) { return SetPartition(N, std::move(blocks)); }

bool is_noncrossing(const SetPartition& p) { return crossing_number(p) == 0; }

}  // namespace

TEST_CASE("enumeration counts")
{
    const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n <= 8; ++n) {
        CHECK(enumerate_set_partitions(n).size() == bell[n]);
        CHECK(bell_number(n) == bell[n]);
    }
    CHECK(enumerate_set_partitions(1).front() == sp(1, {{1}}));
    CHECK(enumerate_set_partitions(0).front().block_count() == 0);

    const std::uint64_t fubini[] = {1, 3, 13, 75, 541};
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_ordered_set_partitions(n).size() == fubini[n - 1]);
    }
}

TEST_CASE("set partitions are canonical and validated")
{
    const auto p = sp(4, {{4, 2}, {3, 1}});
    CHECK(p.blocks() == std::vector<Block>{{1, 3}, {2, 4}});
    CHECK(p.to_string() == "[[1,3],[2,4]]");
    CHECK(SetPartition::from_rgs(p.rgs()) == p);
    CHECK_THROWS(sp(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS(sp(3, {{1, 2}}));
    CHECK_THROWS(sp(2, {{1, 2}, {}}));
}

TEST_CASE("divisible and block-aligned families")
{
    CHECK(enumerate_divisible(2, 4).size() == 36);
    CHECK(enumerate_divisible(1, 3) == std::vector<SetPartition>{sp(3, {{1, 2, 3}})});
    CHECK(enumerate_divisible(2, 1).size() == 2);
    CHECK(is_block_aligned(sp(4, {{1, 2}, {3, 4}}), 2, 2));
    CHECK_FALSE(is_block_aligned(sp(4, {{1, 3}, {2, 4}}), 2, 2));
    CHECK(enumerate_block_aligned(4, 3).size() == 15);
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        std::size_t aligned = 0;
        for (const auto& p : enumerate_divisible(m, n)) {
            aligned += is_block_aligned(p, m, n);
        }
        CHECK(aligned == bell_number(m));
        CHECK(enumerate_block_aligned(m, n).size() == aligned);
    }
}

TEST_CASE("crossing statistics on fixed examples")
{
    const auto p = sp(4, {{1, 3}, {2, 4}});
    CHECK(crossing_number(p) == 1);
    CHECK(restricted_crossing_number(p) == 1);
    CHECK(crossing_number(sp(4, {{1, 2}, {3, 4}})) == 0);
    const auto r = sp(6, {{1, 4}, {2, 6}, {3, 5}});
    CHECK(crossing_number(r) == 2);
    CHECK(restricted_crossing_number(r) == 2);
    CHECK(restricted_crossing_number_scan(r) == 2);
    // Crossings that are not left-reduced.
    const auto s = sp(6, {{1, 3, 5}, {2, 4, 6}});
    CHECK(crossing_number(s) == 6);
    CHECK(restricted_crossing_number(s) == 3);
}

TEST_CASE("c0 by pairwise formula agrees with the left-reduced scan")
{
    for (int N = 0; N <= 9; ++N) {
        for_each_set_partition(N, [](const SetPartition& p) {
            const int c0 = restricted_crossing_number(p);
            REQUIRE(c0 == restricted_crossing_number_scan(p));
            REQUIRE((c0 == 0) == is_noncrossing(p));
        });
    }
}

TEST_CASE("c is invariant under cyclic relabelling")
{
    for (int N = 1; N <= 8; ++N) {
        for_each_set_partition(N, [N](const SetPartition& p) {
            std::vector<Block> moved;
            for (const auto& b : p.blocks()) {
                Block nb;
                for (int x : b) {
                    nb.push_back(x % N + 1);
                }
                moved.push_back(nb);
            }
            REQUIRE(crossing_number(SetPartition(N, moved)) == crossing_number(p));
        });
    }
}

TEST_CASE("sorting number")
{
    CHECK(sorting_number(OrderedSetPartition(2, {{1}, {2}})) == 1);
    CHECK(sorting_number(OrderedSetPartition(2, {{2}, {1}})) == 0);
    CHECK(sorting_number(OrderedSetPartition(5, {{1, 2, 3, 4, 5}})) == 0);
    const OrderedSetPartition ex(7, {{1, 5, 6}, {2, 7}, {3, 4}});
    CHECK(ex.part_map() == std::vector<int>{1, 2, 3, 3, 1, 1, 2});
    CHECK(sorting_number(ex) == 8);
}

TEST_CASE("induced partitions and types")
{
    const auto p = sp(4, {{1, 3}, {2, 4}});
    CHECK(induced_partition(p, std::vector<int>{1, 2}) == sp(2, {{1}, {2}}));
    CHECK(induced_partition(p, std::vector<int>{1, 2, 3, 4}) == p);
    CHECK(induced_partition(sp(5, {{1, 2, 5}, {3, 4}}), std::vector<int>{2, 3, 5}) == sp(3, {{1, 3}, {2}}));
    CHECK_THROWS(induced_partition(p, std::vector<int>{}));
    CHECK(partition_type(p).to_string() == "2,2");
    CHECK(partition_type(sp(3, {{1, 2, 3}})).to_string() == "3");
    CHECK(partition_type(sp(5, {{1, 2, 5}, {3}, {4}})) == IntPartition({3, 1, 1}));
    CHECK(IntPartition::parse("1,3,1") == IntPartition({3, 1, 1}));
    CHECK(IntPartition({2, 1}).scaled(3) == IntPartition({6, 3}));
    CHECK(integer_partitions(4).size() == 5);
    CHECK(integer_partitions(6).size() == 11);
}

TEST_CASE("rotating labels")
{
    const OrderedSetPartition p(2, {{1}, {2}});
    CHECK(rotate_labels(p, 1) == OrderedSetPartition(2, {{2}, {1}}));
    CHECK(rotate_labels(p, 2) == p);
    CHECK(rotate_labels(OrderedSetPartition(3, {{1, 2}, {3}}), 1) == OrderedSetPartition(3, {{2, 3}, {1}}));
    CHECK(rotate_labels(OrderedSetPartition(3, {{1, 2}, {3}}), -1) == OrderedSetPartition(3, {{1, 3}, {2}}));
}

TEST_CASE("bold sigma on ordered partitions")
{
    const OrderedSetPartition p(7, {{1, 5, 6}, {2, 7}, {3, 4}});
    CHECK(bold_sigma(p) == OrderedSetPartition(7, {{2, 6, 7}, {1, 5}, {3, 4}}));
    const OrderedSetPartition one(4, {{1, 2, 3, 4}});
    CHECK(bold_sigma(one) == one);
    CHECK(orbit_bold_sigma(OrderedSetPartition(2, {{1}, {2}})).size() == 2);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& q : enumerate_ordered_set_partitions(n)) {
            const auto orb = orbit_bold_sigma(q);
            REQUIRE(n % static_cast<int>(orb.size()) == 0);
        }
    }
}

TEST_CASE("bold sigma on divisible partitions")
{
    CHECK(bold_sigma_divisible(sp(4, {{1, 3}, {2, 4}}), 2) == sp(4, {{1, 4}, {2, 3}}));
    CHECK(bold_sigma_divisible(sp(4, {{1, 2}, {3, 4}}), 2) == sp(4, {{1, 2}, {3, 4}}));
    CHECK_THROWS(bold_sigma_divisible(sp(4, {{1, 2, 3}, {4}}), 2));
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        for (const auto& p : enumerate_divisible(m, n)) {
            const auto orb = orbit_bold_sigma_divisible(p, n);
            REQUIRE(n % static_cast<int>(orb.size()) == 0);
            REQUIRE((orb.size() == 1) == is_block_aligned(p, m, n));
            for (const auto& x : orb) {
                for (const auto& b : x.blocks()) {
                    REQUIRE(b.size() % n == 0);
                }
            }
        }
    }
}

TEST_CASE("weighted sums")
{
    const auto z3 = CycloNum::root_of_unity(3, 1);
    CHECK(weighted_c0_sum(enumerate_divisible(2, 2), CycloNum(-1)) == CycloNum(2));
    CHECK(weighted_c0_sum(enumerate_divisible(3, 3), z3) == CycloNum(5));
    CHECK(weighted_c0_sum(enumerate_divisible(4, 2), CycloNum(-1), IntPartition({4, 4})) == CycloNum(3));
    // Only noncrossing partitions survive at q = 0: Catalan numbers.
    CHECK(weighted_c0_sum(enumerate_set_partitions(6), CycloNum(0)) == CycloNum(132));
    CHECK(crossing_weight(CycloNum(0), 0).is_one());
    CHECK(crossing_weight(CycloNum(0), 3).is_zero());
}
