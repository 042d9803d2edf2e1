#include <doctest.h>

#include <algorithm>
#include <set>

#include "occ132/error.hpp"
#include "occ132/kernel.hpp"
#include "support.hpp"

using namespace occ132;
namespace ts = testing_support;

static Permutation P(const char* s) { return Permutation::parse(s); }

static std::vector<Cell> cells(std::initializer_list<std::pair<int, int>> ml) {
    std::vector<Cell> out;
    for (auto [m, l] : ml) out.push_back({m, l});
    return out;
}

// Kernel positions by flood fill over naive triples.
static std::vector<int> naive_kernel_positions(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (v[i] < v[k] && v[k] < v[j]) {
                    for (int a : {i, j, k})
                        for (int b : {i, j, k}) adj[a].push_back(b);
                }
    const int start = static_cast<int>(std::find(v.begin(), v.end(), n) - v.begin());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (seen[i]) out.push_back(i + 1);
    return out;
}

// Cell feasibility by insertion: a point placed in C_ml may not take part in
// any new occurrence.
static bool naive_feasible(const Permutation& rho, int m, int l) {
    std::vector<int> v;
    for (int i = 1; i <= rho.size(); ++i) {
        if (i == l) v.push_back(2 * m - 1);
        v.push_back(2 * rho(i));
    }
    if (l == rho.size() + 1) v.push_back(2 * m - 1);
    std::vector<int> base;
    for (int x : rho.values()) base.push_back(x);
    return ts::naive_count_132(v) == ts::naive_count_132(base);
}

TEST_CASE("occurrence graph") {
    const auto g = build_occurrence_graph(P("57614283"));
    CHECK(g.entry_count == 8);
    CHECK(g.occurrences.size() == 5);
    for (int p = 1; p <= 8; ++p) {
        for (int o : g.incidence[static_cast<std::size_t>(p - 1)]) {
            const auto& occ = g.occurrences[static_cast<std::size_t>(o)];
            CHECK((occ.i == p || occ.j == p || occ.k == p));
        }
    }
    const auto id = build_occurrence_graph(P("1234"));
    CHECK(id.occurrences.empty());
    CHECK(id.components().size() == 4);
    const auto one = build_occurrence_graph(P("132"));
    REQUIRE(one.components().size() == 1);
    CHECK(one.components()[0].entry_count() == 3);
    CHECK(one.components()[0].occurrence_count() == 1);
}

TEST_CASE("kernels from the worked examples") {
    const auto k = kernel_of(P("57614283"));
    CHECK(k.values == std::vector<int>{1, 4, 2, 8, 3});
    CHECK(k.shape.to_string() == "14253");
    CHECK(k.size == 5);
    CHECK(k.capacity == 4);

    const auto k2 = kernel_of(P("67382451"));
    CHECK(k2.values == std::vector<int>{3, 8, 4, 5});
    CHECK(k2.shape.to_string() == "1423");

    const auto id = kernel_of(P("12345"));
    CHECK(id.shape.to_string() == "1");
    CHECK(id.size == 1);
    CHECK(id.capacity == 0);
    CHECK_THROWS_AS(kernel_of(P("")), Error);
}

TEST_CASE("kernel agrees with flood fill on S_n, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        ts::for_each_permutation(n, [&](const std::vector<int>& v) {
            REQUIRE(kernel_of(Permutation(v)).positions == naive_kernel_positions(v));
        });
    }
}

TEST_CASE("kernel permutations") {
    CHECK(is_kernel_permutation(P("1")));
    CHECK(is_kernel_permutation(P("132")));
    CHECK_FALSE(is_kernel_permutation(P("12")));
    CHECK(is_kernel_permutation(P("35142")));
}

TEST_CASE("feasible cells and their order") {
    CHECK(order_feasible_cells(cell_decomposition(P("1"))) == cells({{1, 1}, {1, 2}}));
    CHECK(order_feasible_cells(cell_decomposition(P("1423"))) == cells({{4, 1}, {1, 3}, {1, 4}, {1, 5}}));
    CHECK(order_feasible_cells(cell_decomposition(P("132"))) == cells({{3, 1}, {1, 3}, {1, 4}}));
    CHECK_THROWS_AS(cell_decomposition(P("12")), Error);
}

TEST_CASE("feasibility agrees with insertion test for every small kernel shape") {
    int shapes = 0;
    for (int n = 1; n <= 7; ++n) {
        ts::for_each_permutation(n, [&](const std::vector<int>& v) {
            const Permutation rho(v);
            if (!is_kernel_permutation(rho)) return;
            ++shapes;
            const auto dec = cell_decomposition(rho);
            for (int m = 1; m <= n; ++m)
                for (int l = 1; l <= n + 1; ++l) {
                    REQUIRE(dec.feasible({m, l}) == naive_feasible(rho, m, l));
                    if (southwest_infeasible(rho, {m, l})) REQUIRE_FALSE(dec.feasible({m, l}));
                }
        });
    }
    CHECK(shapes > 100);
}

TEST_CASE("north-east LIS lengths") {
    CHECK(lis_northeast(P("1423")) == std::vector<int>{1, 2, 1, 0});
    CHECK(lis_northeast(P("1")) == std::vector<int>{1, 0});
    CHECK(lis_northeast(P("132")) == std::vector<int>{1, 1, 0});
    const auto rec = make_shape_record(P("1423"));
    CHECK(rec.size == 4);
    CHECK(rec.capacity == 2);
    CHECK(rec.lis == 3);
    CHECK(rec.feasible_count() == 4);
}

TEST_CASE("decomposition of the worked examples") {
    const auto d = decompose(P("67382451"));
    CHECK(d.shape.to_string() == "1423");
    REQUIRE(d.contents.size() == 4);
    CHECK(d.contents[0].to_string() == "12");
    CHECK(d.contents[1].to_string() == "1");
    CHECK(d.contents[2].empty());
    CHECK(d.contents[3].to_string() == "1");

    const auto big = decompose(P("10,11,7,12,4,6,5,8,3,9,2,1"));
    CHECK(big.shape.to_string() == "1423");
    REQUIRE(big.contents.size() == 4);
    CHECK(big.contents[1].to_string() == "132");  // C_13 = {4, 6, 5}
    CHECK(big.contents[2].to_string() == "1");    // C_14 = {3}

    for (const char* rho : {"1", "132", "1423", "35142"}) {
        const auto dr = decompose(P(rho));
        CHECK(dr.shape.to_string() == rho);
        for (const auto& c : dr.contents) CHECK(c.empty());
    }
}

TEST_CASE("assembly") {
    const std::vector<Permutation> parts{P("12"), P("1"), P(""), P("1")};
    CHECK(assemble(P("1423"), parts).to_string() == "67382451");
    CHECK(assemble(P("1"), std::vector<Permutation>{P(""), P("1")}).to_string() == "21");
    CHECK(assemble(P("35142"), std::vector<Permutation>(4)).to_string() == "35142");
    CHECK_THROWS_AS(assemble(P("1423"), std::vector<Permutation>(3)), Error);
}

TEST_CASE("decompose then assemble is the identity on S_n, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        ts::for_each_permutation(n, [&](const std::vector<int>& v) {
            const Permutation pi(v);
            const auto d = decompose(pi);
            REQUIRE(assemble(d.shape, d.contents) == pi);
            // Cell contents must add no occurrences beyond their own and the kernel's.
            std::int64_t inside = count_132(d.shape);
            for (const auto& c : d.contents) inside += count_132(c);
            REQUIRE(inside == count_132(pi));
        });
    }
}
