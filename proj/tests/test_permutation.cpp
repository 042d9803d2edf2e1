#include <doctest.h>

#include "occ132/error.hpp"
#include "occ132/permutation.hpp"
#include "support.hpp"

using namespace occ132;
namespace ts = testing_support;

static Permutation P(const char* s) { return Permutation::parse(s); }

TEST_CASE("construction validates entries") {
    CHECK(Permutation(std::vector<int>{}).empty());
    CHECK(Permutation(std::vector<int>{5, 7, 6, 1, 4, 2, 8, 3}).size() == 8);
    CHECK_THROWS_AS(make_permutation({1, 1, 2}), Error);
    CHECK_THROWS_AS(make_permutation({0, 1}), Error);
    CHECK_THROWS_AS(make_permutation({1, 3}), Error);
}

TEST_CASE("parse and print round trip") {
    CHECK(P("57614283").to_string() == "57614283");
    const auto big = P("10,11,7,12,4,6,5,8,3,9,2,1");
    CHECK(big.size() == 12);
    CHECK(big(4) == 12);
    CHECK(Permutation::parse(big.to_string()) == big);
    CHECK(P("").empty());
    CHECK_THROWS_AS(P("1x2"), Error);
}

TEST_CASE("inverse composes to identity") {
    const auto p = P("57614283");
    const auto q = p.inverse();
    for (int i = 1; i <= p.size(); ++i) CHECK(q(p(i)) == i);
}

TEST_CASE("occurrence listing") {
    const auto occ = occurrences_132(P("132"));
    REQUIRE(occ.size() == 1);
    CHECK(occ[0].i == 1);
    CHECK(occ[0].j == 2);
    CHECK(occ[0].k == 3);
    CHECK(occurrences_132(P("57614283")).size() == 5);
    CHECK(occurrences_132(P("1234")).empty());
}

TEST_CASE("occurrence counts") {
    CHECK(count_132(P("14253")) == 4);
    CHECK(count_132(P("35142")) == 2);
    CHECK(count_132(P("1432")) == 3);
    CHECK(count_132(P("")) == 0);
}

TEST_CASE("fast counter agrees with naive triple loop on S_n, n <= 7") {
    for (int n = 0; n <= 7; ++n) {
        ts::for_each_permutation(n, [&](const std::vector<int>& v) {
            const auto naive = ts::naive_count_132(v);
            REQUIRE(count_132(std::span<const int>(v)) == naive);
            REQUIRE(static_cast<std::int64_t>(occurrences_132(Permutation(v)).size()) == naive);
        });
    }
}

TEST_CASE("total occurrences over S_4") {
    // Each 3-subset of positions forms 132 in n!/6 permutations: C(4,3) * 24 / 6 = 16.
    std::int64_t total = 0;
    ts::for_each_permutation(4, [&](const std::vector<int>& v) { total += count_132(std::span<const int>(v)); });
    CHECK(total == 16);
}

TEST_CASE("pattern reduction") {
    const std::vector<int> a{1, 4, 2, 8, 3};
    CHECK(reduce_to_pattern(a).to_string() == "14253");
    const std::vector<int> b{3, 8, 4, 5};
    CHECK(reduce_to_pattern(b).to_string() == "1423");
    const std::vector<int> c{7};
    CHECK(reduce_to_pattern(c).to_string() == "1");
    const std::vector<int> dup{2, 2};
    CHECK_THROWS_AS(reduce_to_pattern(dup), Error);
    // Idempotent.
    const auto once = reduce_to_pattern(std::vector<int>{40, 10, 30, 20});
    CHECK(reduce_to_pattern(once.values()) == once);
}

TEST_CASE("longest increasing subsequence") {
    CHECK(lis_length(std::vector<int>{}) == 0);
    CHECK(lis_length(std::vector<int>{1, 4, 2, 3}) == 3);
    CHECK(lis_length(std::vector<int>{2, 3}) == 2);
    for (int n = 0; n <= 7; ++n) {
        ts::for_each_permutation(n, [&](const std::vector<int>& v) { REQUIRE(lis_length(v) == ts::naive_lis(v)); });
    }
}

TEST_CASE("monotone avoidance") {
    CHECK(avoids_monotone(P("21"), 2));
    CHECK_FALSE(avoids_monotone(P("1234"), 3));
    CHECK_FALSE(avoids_monotone(P("21"), 0));
    CHECK_FALSE(avoids_monotone(P(""), 0));
    CHECK(avoids_monotone(P(""), 1));
}

TEST_CASE("canonical shape order") {
    ShapeLess less;
    CHECK(less(P("1"), P("132")));
    CHECK(less(P("1243"), P("1342")));
    CHECK_FALSE(less(P("2143"), P("1423")));
}
