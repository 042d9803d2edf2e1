#include <doctest.h>

#include <sstream>

#include "occ132/error.hpp"
#include "occ132/io.hpp"
#include "occ132/solver.hpp"

using namespace occ132;

TEST_CASE("record serialization") {
    const auto rec = make_shape_record(Permutation::parse("1423"));
    const auto j = record_to_json(rec);
    CHECK(j.dump() == R"({"capacity":2,"cells":[[4,1],[1,3],[1,4],[1,5]],"lis_ne":[1,2,1,0],"shape":[1,4,2,3],"size":4})");
    CHECK(record_from_json(j) == rec);
    auto stale = j;
    stale["lis_ne"] = {1, 1, 1, 0};
    CHECK_THROWS_AS(record_from_json(stale), Error);
    auto bad = j;
    bad["shape"] = {1, 2};
    CHECK_THROWS_AS(record_from_json(bad), Error);
}

TEST_CASE("catalog round trip") {
    const auto cat = enumerate_kernel_shapes(3);
    const auto text = catalog_to_jsonl(cat);
    std::istringstream in(text);
    const auto back = catalog_from_jsonl(in);
    CHECK(back.max_occ == 3);
    CHECK(back.records == cat.records);
    CHECK(catalog_to_jsonl(back) == text);
}

TEST_CASE("catalog header checks") {
    const auto text = catalog_to_jsonl(enumerate_kernel_shapes(1));
    auto wrong_version = text;
    wrong_version.replace(wrong_version.find("\"format_version\":1"), 18, "\"format_version\":0");
    std::istringstream a(wrong_version);
    CHECK_THROWS_AS(catalog_from_jsonl(a), Error);
    std::istringstream b(text.substr(0, text.rfind('{')));
    CHECK_THROWS_AS(catalog_from_jsonl(b), Error);
    std::istringstream c("");
    CHECK_THROWS_AS(catalog_from_jsonl(c), Error);
    CHECK_THROWS_AS(read_catalog("/nonexistent/catalog.jsonl"), Error);
}

TEST_CASE("series output is exact text") {
    PowerSeries s(3, {mpq_class(1), mpq_class(0), mpq_class("123456789012345678901234567890"), mpq_class(1, 2)});
    CHECK(series_to_json(s).dump() == R"(["1","0","123456789012345678901234567890","1/2"])");
    CHECK(series_to_csv(s) == "n,coefficient\n0,1\n1,0\n2,123456789012345678901234567890\n3,1/2\n");
}

TEST_CASE("closed-form output") {
    PsiSolver solver(enumerate_kernel_shapes(2), 8);
    const auto j = closed_form_to_json(solver.psi_closed_form(2), 2);
    CHECK(j["two_P"] == nlohmann::json({"-2", "3", "1"}));
    CHECK(j["two_Q"] == nlohmann::json({"2", "-15", "29", "-4", "2"}));
    CHECK(j["exponent_num"] == -3);
    CHECK(j["exponent_den"] == 2);
    const auto tex = closed_form_to_latex(solver.psi_closed_form(1), 1);
    CHECK(tex.find("(1-4x)^{-1/2}") != std::string::npos);
}

TEST_CASE("census output") {
    const auto j = census_to_json(census(enumerate_kernel_shapes(3)), 3);
    CHECK(j["max_occ"] == 3);
    CHECK(j["new_nonexceptional"]["3"] == 20);
}
