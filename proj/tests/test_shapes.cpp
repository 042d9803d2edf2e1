#include <doctest.h>

#include <set>
#include <string>

#include "occ132/error.hpp"
#include "occ132/invariants.hpp"
#include "occ132/shapes.hpp"
#include "support.hpp"

using namespace occ132;
namespace ts = testing_support;

static std::set<std::string> names(const ShapeCatalog& c) {
    std::set<std::string> out;
    for (const auto& r : c.records) out.insert(r.shape.to_string());
    return out;
}

// A permutation is a kernel permutation iff its occurrence graph connects
// every entry to the maximum (or it is the single entry 1).
static bool naive_is_kernel(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (v[i] < v[k] && v[k] < v[j]) {
                    parent[find(i)] = find(j);
                    parent[find(k)] = find(j);
                }
    for (int i = 0; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

TEST_CASE("catalog at r = 1 and r = 2") {
    CHECK(names(enumerate_kernel_shapes(1)) == std::set<std::string>{"1", "132"});
    CHECK(names(enumerate_kernel_shapes(2)) ==
          std::set<std::string>{"1", "132", "1243", "1342", "1423", "2143", "35142"});
}

TEST_CASE("exceptional shapes") {
    CHECK(exceptional_shape(1).to_string() == "132");
    CHECK(exceptional_shape(2).to_string() == "35142");
    const auto e3 = exceptional_shape(3);
    CHECK(e3.to_string() == "5736142");
    const auto rec = make_shape_record(e3);
    CHECK(rec.capacity == 3);
    CHECK(rec.feasible_count() == 5);
    CHECK_THROWS_AS(exceptional_shape(0), Error);
    for (int r = 1; r <= 3; ++r) {
        const auto found = verify_exceptional(r);
        REQUIRE(found.size() == 1);
        CHECK(found[0] == exceptional_shape(r));
    }
}

TEST_CASE("catalog matches an independent scan for r <= 3") {
    for (int r = 1; r <= 3; ++r) {
        std::set<std::string> expected;
        for (int t = 1; t <= 2 * r + 1; ++t) {
            ts::for_each_permutation(t, [&](const std::vector<int>& v) {
                if (ts::naive_count_132(v) <= r && naive_is_kernel(v)) expected.insert(Permutation(v).to_string());
            });
        }
        CHECK(names(enumerate_kernel_shapes(r)) == expected);
        std::set<std::string> scanned;
        for (const auto& p : kernel_shapes_by_scan(2 * r + 1, r)) scanned.insert(p.to_string());
        CHECK(scanned == expected);
    }
}

TEST_CASE("census through r = 4") {
    const auto cat = enumerate_kernel_shapes(4);
    const auto c = census(cat);
    REQUIRE(c.new_nonexceptional.size() == 5);
    CHECK(c.new_nonexceptional[1] == 0);
    CHECK(c.new_nonexceptional[2] == 4);
    CHECK(c.new_nonexceptional[3] == 20);
    CHECK(c.new_nonexceptional[4] == 104);
    CHECK(check_catalog_order(cat).passed());
    CHECK(check_catalog_records(cat).passed());
}

TEST_CASE("enumeration is independent of thread count") {
    const auto a = enumerate_kernel_shapes(4, {1});
    const auto b = enumerate_kernel_shapes(4, {3});
    CHECK(a.records == b.records);
}

TEST_CASE("restriction to a smaller budget") {
    const auto cat = enumerate_kernel_shapes(3);
    CHECK(cat.restricted_to(2).records == enumerate_kernel_shapes(2).records);
    CHECK(cat.restricted_to(2).max_occ == 2);
}
