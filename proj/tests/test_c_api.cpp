#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "occ132/occ132.h"

namespace {

std::string take(occ132_string* s) {
    std::string out(occ132_string_data(s), occ132_string_length(s));
    occ132_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("counting through the C interface") {
    const int v[] = {5, 7, 6, 1, 4, 2, 8, 3};
    uint64_t c = 0;
    CHECK(occ132_count_132(v, 8, &c) == OCC132_OK);
    CHECK(c == 5);
    const int dup[] = {1, 1};
    CHECK(occ132_count_132(dup, 2, &c) == OCC132_E_INVALID_ARGUMENT);
    CHECK(std::string(occ132_last_error()).find("duplicate") != std::string::npos);
    CHECK(occ132_count_132(nullptr, 3, &c) == OCC132_E_INVALID_ARGUMENT);
}

TEST_CASE("kernel report") {
    occ132_string* s = nullptr;
    REQUIRE(occ132_kernel_json("67382451", &s) == OCC132_OK);
    const auto text = take(s);
    CHECK(text.find("\"shape\":\"1423\"") != std::string::npos);
    CHECK(text.find("\"pattern\":\"12\"") != std::string::npos);
    CHECK(occ132_kernel_json("1,1", &s) == OCC132_E_INVALID_ARGUMENT);
}

TEST_CASE("catalog, solver and verification") {
    occ132_catalog* cat = nullptr;
    REQUIRE(occ132_catalog_enumerate(2, 1, &cat) == OCC132_OK);
    CHECK(occ132_catalog_max_occ(cat) == 2);
    CHECK(occ132_catalog_size(cat) == 7);

    occ132_solver* solver = nullptr;
    REQUIRE(occ132_solver_create(cat, 8, &solver) == OCC132_OK);
    occ132_string* s = nullptr;
    REQUIRE(occ132_psi_series(solver, 1, OCC132_FORMAT_JSON, &s) == OCC132_OK);
    CHECK(take(s) == "[\"0\",\"0\",\"0\",\"1\",\"5\",\"21\",\"84\",\"330\",\"1287\"]\n");
    REQUIRE(occ132_psi_coefficient(solver, 2, 5, &s) == OCC132_OK);
    CHECK(take(s) == "23");
    CHECK(occ132_psi_series(solver, 3, OCC132_FORMAT_JSON, &s) == OCC132_E_MISSING_SHAPES);
    CHECK(occ132_psi_series(solver, 1, OCC132_FORMAT_LATEX, &s) == OCC132_E_INVALID_ARGUMENT);

    int mismatches = -1;
    REQUIRE(occ132_verify(solver, 2, 8, 0, 1, &s, &mismatches) == OCC132_OK);
    CHECK(mismatches == 0);
    CHECK(take(s).find("mismatches: 0") != std::string::npos);
    REQUIRE(occ132_verify(solver, 1, 8, 3, 1, &s, &mismatches) == OCC132_OK);
    CHECK(mismatches == 0);
    take(s);
    CHECK(occ132_verify(solver, 1, 8, 0, 1, nullptr, &mismatches) == OCC132_E_INVALID_ARGUMENT);

    int counterexamples = -1;
    REQUIRE(occ132_conjectures(solver, 2, &s, &counterexamples) == OCC132_OK);
    CHECK(counterexamples == 0);
    take(s);

    occ132_solver_free(solver);
    occ132_catalog_free(cat);
}

TEST_CASE("catalog cache reuse and rebuild") {
    const auto path = (std::filesystem::temp_directory_path() / "occ132_c_api_cache.jsonl").string();
    std::filesystem::remove(path);
    occ132_catalog* cat = nullptr;
    REQUIRE(occ132_catalog_obtain(path.c_str(), 2, 1, &cat) == OCC132_OK);
    CHECK(std::filesystem::exists(path));
    occ132_catalog_free(cat);
    // A larger cache satisfies a smaller request.
    REQUIRE(occ132_catalog_obtain(path.c_str(), 1, 1, &cat) == OCC132_OK);
    CHECK(occ132_catalog_max_occ(cat) == 2);
    occ132_catalog_free(cat);
    // A smaller cache is rebuilt.
    REQUIRE(occ132_catalog_obtain(path.c_str(), 3, 1, &cat) == OCC132_OK);
    CHECK(occ132_catalog_max_occ(cat) == 3);
    occ132_catalog_free(cat);
    // A cache in an old format is rebuilt.
    if (FILE* f = std::fopen(path.c_str(), "w")) {
        std::fputs("{\"format\":\"occ132-shape-catalog\",\"format_version\":0,\"max_occ\":9,\"records\":0}\n", f);
        std::fclose(f);
    }
    REQUIRE(occ132_catalog_obtain(path.c_str(), 2, 1, &cat) == OCC132_OK);
    CHECK(occ132_catalog_max_occ(cat) == 2);
    occ132_catalog_free(cat);
    std::filesystem::remove(path);
}

TEST_CASE("oracle and guards") {
    uint64_t c = 0;
    CHECK(occ132_oracle_count(5, 0, 3, 1, &c) == OCC132_OK);
    CHECK(c == 16);
    CHECK(occ132_oracle_count(11, 0, 0, 1, &c) == OCC132_E_GUARD);
    occ132_string* s = nullptr;
    REQUIRE(occ132_oracle_distribution_json(4, 1, &s) == OCC132_OK);
    CHECK(take(s).find("14") != std::string::npos);
    CHECK(std::string(occ132_status_string(OCC132_E_GUARD)).size() > 0);
}
