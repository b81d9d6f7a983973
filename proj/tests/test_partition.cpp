#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "plethysm/partition.hpp"

using namespace plethysm;

TEST_CASE("transpose examples") {
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{5, 5, 2}) == Partition{3, 3, 2, 2, 2});
}

TEST_CASE("transpose is an involution and agrees with the diagram flip up to 30") {
    for (int n = 0; n <= 30; ++n) {
        for (const auto& p : partitions_of(n)) {
            const Partition t = p.transpose();
            REQUIRE(t.transpose() == p);
            REQUIRE(t.size() == p.size());
            REQUIRE(t.height() == p.width());
            REQUIRE(t.width() == p.height());
            if (n <= 14) REQUIRE(t == oracle::transpose_by_cells(p));
        }
    }
}

TEST_CASE("is_partition and size") {
    CHECK(is_partition(Composition{2, 2, 1}));
    CHECK_FALSE(is_partition(Composition{1, 2}));
    CHECK(Composition{0}.empty());
    CHECK(is_partition(Composition{0}));
    CHECK(size(Composition{3, 1}) == 4);
    CHECK(size(Composition{}) == 0);
    CHECK(size(Composition{4, 2, 2, 1}) == 9);
}

TEST_CASE("canonical form drops trailing zeros and is idempotent") {
    const Composition c{2, 0, 1, 0, 0};
    CHECK(c.parts() == std::vector<int>{2, 0, 1});
    CHECK(Composition(c.parts()) == c);
    CHECK(c[7] == 0);
    CHECK(c.coordinate_sum() == 2);
    CHECK_THROWS_AS(Composition({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_FALSE(Partition::from(Composition{0, 3}).has_value());
}

TEST_CASE("partition enumeration counts") {
    const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
    CHECK(partitions_of(30).size() == 5604);
    const auto bounded = partitions_of(6, 2, 4);
    CHECK(bounded.size() == 2);  // (4,2) and (3,3)
    CHECK(bounded.front() == Partition{4, 2});
    for (int n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>()));
    }
}

TEST_CASE("text form round-trips") {
    CHECK(format(Composition{3, 1}) == "[3,1]");
    CHECK(format(Composition{}) == "[]");
    CHECK(parse_composition(" [2, 0,1,0] ") == Composition{2, 0, 1});
    CHECK(parse_partition("[3,1]") == Partition{3, 1});
    CHECK(parse_partition("[]") == Partition{});
    CHECK_THROWS_AS(parse_partition("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("3,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("[3,,1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("[-1]"), std::invalid_argument);
    for (const auto& p : partitions_of(7)) CHECK(parse_partition(format(p)) == p);
}

TEST_CASE("entrywise sum") {
    CHECK(Composition{1, 2} + Composition{0, 0, 3} == Composition{1, 2, 3});
    CHECK(Composition{} + Composition{} == Composition{});
}
