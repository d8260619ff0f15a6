#include <doctest.h>

#include "oracles.hpp"
#include "schurcalc/partition.hpp"

using namespace schurcalc;

TEST_CASE("parse accepts canonical forms") {
    const Partition p = Partition::parse("5,2,2,1");
    CHECK(p.parts() == std::vector<int>{5, 2, 2, 1});
    CHECK(p.size() == 10);
    CHECK(p.length() == 4);
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("0").size() == 0);
    CHECK(Partition::parse(" 5, 2,2,1 ") == p);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Partition::parse(""), ParseError);
    CHECK_THROWS_AS(Partition::parse("2,3"), ParseError);   // increasing
    CHECK_THROWS_AS(Partition::parse("3,0"), ParseError);   // zero among parts
    CHECK_THROWS_AS(Partition::parse("a"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("-2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("99999999999999999999"), ParseError);
}

TEST_CASE("to_string round trips") {
    for (int n = 0; n <= 7; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("transpose matches the column-count definition") {
    CHECK(Partition::parse("3").transposed() == Partition::parse("1,1,1"));
    CHECK(Partition::parse("3,3").transposed() == Partition::parse("2,2,2"));
    CHECK(Partition::parse("5,2,2,1").transposed() == Partition::parse("4,3,1,1,1"));
    CHECK(Partition{}.transposed() == Partition{});
}

TEST_CASE("transpose is an involution preserving size") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& p : partitions_of(n)) {
            CHECK(p.transposed().transposed() == p);
            CHECK(p.transposed().size() == p.size());
            if (!p.empty()) CHECK(p.transposed().length() == p.part(1));
        }
}

TEST_CASE("containment") {
    CHECK(contains(Partition::parse("2,1"), Partition::parse("5,2,2,1")));
    CHECK_FALSE(contains(Partition::parse("2,2"), Partition::parse("3,1")));
    for (int n = 0; n <= 6; ++n)
        for (const Partition& p : partitions_of(n)) {
            CHECK(contains(p, p));
            CHECK(contains(Partition{}, p));
        }
}

TEST_CASE("containment commutes with transpose") {
    for (int a = 0; a <= 8; ++a)
        for (const Partition& mu : partitions_of(a))
            for (int b = a; b <= 8; ++b)
                for (const Partition& la : partitions_of(b))
                    CHECK(contains(mu, la) == contains(mu.transposed(), la.transposed()));
}

TEST_CASE("has_cell") {
    const Partition p = Partition::parse("5,2,2,1");
    CHECK(has_cell(p, 1, 5));
    CHECK_FALSE(has_cell(p, 2, 3));
    CHECK(has_cell(p, 1, 1));
    CHECK_FALSE(has_cell(Partition{}, 1, 1));
}

TEST_CASE("has_cell agrees with rectangle containment") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& la : partitions_of(n))
            for (int i = 1; i <= 6; ++i)
                for (int j = 1; j <= 6; ++j)
                    CHECK(has_cell(la, i, j) == contains(Partition::rectangle(j, i), la));
}

TEST_CASE("rectangles") {
    const auto r = Partition::parse("2,2,2").as_rectangle();
    REQUIRE(r.has_value());
    CHECK(r->width == 2);
    CHECK(r->rows == 3);
    CHECK_FALSE(Partition::parse("3,1").as_rectangle().has_value());
    const auto single = Partition::parse("4").as_rectangle();
    REQUIRE(single.has_value());
    CHECK(single->width == 4);
    CHECK(single->rows == 1);
    CHECK_FALSE(Partition{}.as_rectangle().has_value());
    CHECK(Partition::rectangle(3, 2) == Partition::parse("3,3"));
    CHECK(Partition::rectangle(3, 2).transposed() == Partition::rectangle(2, 3));
}

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
    const auto four = partitions_of(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == Partition::parse("4"));
    CHECK(four[1] == Partition::parse("3,1"));
    CHECK(four[2] == Partition::parse("2,2"));
    CHECK(four[3] == Partition::parse("2,1,1"));
    CHECK(four[4] == Partition::parse("1,1,1,1"));

    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<size_t>(expected[n]));
    CHECK_THROWS_AS(partitions_of(31), BoundExceeded);
}

TEST_CASE("specht dimensions via hooks") {
    for (int n = 1; n <= 6; ++n) CHECK(specht_dim(Partition::row(n)) == 1);
    CHECK(specht_dim(Partition::parse("2,1")) == 2);
    CHECK(specht_dim(Partition::parse("3,2")) == 5);
    CHECK_THROWS_AS(specht_dim(Partition{}), EmptyPartition);
}

TEST_CASE("specht_dim equals the standard tableau count") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& la : partitions_of(n)) CHECK(specht_dim(la) == oracles::count_standard_tableaux(la));
}

TEST_CASE("sum of squared dimensions is n!") {
    long long factorial = 1;
    for (int n = 1; n <= 8; ++n) {
        factorial *= n;
        long long sum = 0;
        for (const Partition& la : partitions_of(n)) {
            const long long d = specht_dim(la);
            sum += d * d;
        }
        CHECK(sum == factorial);
    }
}
