#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nutkit/census.hpp"
#include "nutkit/errors.hpp"

using namespace nutkit;

TEST_CASE("census of the first family up to n = 6 finds exactly one nut tuple") {
    CensusResult result = run_census({Family::T1}, 6, 1);
    CHECK(result.all_agree());
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> nut_tuples;
    for (const CensusRecord& rec : result.records)
        if (rec.kernel_verdict) nut_tuples.emplace_back(rec.n, rec.a, *rec.b);
    CHECK(nut_tuples == decltype(nut_tuples){{6, 2, 4}});
}

TEST_CASE("nut counts per n stay at their frozen values") {
    // first-run kernel fixtures, matching the arithmetic predicates
    CensusResult t1 = run_census({Family::T1}, 10, 2);
    std::vector<std::int64_t> t1_nuts;
    for (const auto& line : t1.summary) t1_nuts.push_back(line.nuts);
    CHECK(t1_nuts == std::vector<std::int64_t>{0, 0, 1, 0, 6});

    CensusResult t4 = run_census({Family::T4}, 10, 2);
    std::vector<std::int64_t> t4_nuts;
    for (const auto& line : t4.summary) t4_nuts.push_back(line.nuts);
    // n = 2 yields no valid tuples, so four summary lines
    CHECK(t4_nuts == std::vector<std::int64_t>{0, 2, 2, 4});
}

TEST_CASE("families without the nut property report zero nuts") {
    CensusResult others = run_census({Family::T2, Family::T3, Family::B1, Family::B2, Family::B3,
                                      Family::Circulant}, 10, 2);
    CHECK(others.all_agree());
    for (const auto& line : others.summary) CHECK(line.nuts == 0);
    CHECK_FALSE(others.records.empty());
}

TEST_CASE("census CSV schema") {
    CensusResult result = run_census({Family::T1, Family::T3}, 6, 1);
    const std::string csv = census_csv(result);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "family,n,a,b,predicate,cyclotomic,kernel,nullity,agree");
    bool saw_t3 = false;
    while (std::getline(in, line)) {
        if (line.rfind("t3,", 0) == 0) {
            saw_t3 = true;
            // single-parameter family: blank b, blank cyclotomic
            std::vector<std::string> fields;
            std::stringstream fs(line);
            std::string field;
            while (std::getline(fs, field, ',')) fields.push_back(field);
            // trailing empty field is not possible here: agree is last
            REQUIRE(fields.size() == 9);
            CHECK(fields[3].empty());
            CHECK(fields[5].empty());
        }
    }
    CHECK(saw_t3);
}

TEST_CASE("census output is identical across worker counts") {
    CensusResult one = run_census({Family::T1, Family::T4, Family::B2}, 10, 1);
    CensusResult four = run_census({Family::T1, Family::T4, Family::B2}, 10, 4);
    CHECK(census_csv(one) == census_csv(four));
    CHECK(census_json(one) == census_json(four));
}

TEST_CASE("family order in the output is canonical regardless of request order") {
    CensusResult a = run_census({Family::T4, Family::B2, Family::T1}, 8, 2);
    CensusResult b = run_census({Family::T1, Family::T4, Family::B2}, 8, 2);
    CHECK(census_csv(a) == census_csv(b));
}

TEST_CASE("census JSON mirrors the CSV records") {
    CensusResult result = run_census({Family::T4}, 8, 1);
    auto doc = nlohmann::json::parse(census_json(result));
    REQUIRE(doc["records"].size() == result.records.size());
    CHECK(doc["records"][0]["family"] == "t4");
    CHECK(doc["disagreements"].empty());
    std::size_t nuts = 0;
    for (const auto& rec : doc["records"])
        if (rec["kernel"].get<bool>()) ++nuts;
    std::size_t expected = 0;
    for (const auto& line : result.summary) expected += static_cast<std::size_t>(line.nuts);
    CHECK(nuts == expected);
}

TEST_CASE("appendix CSV spot rows") {
    const std::string table_a = appendix_csv(AppendixTable::A);
    CHECK(table_a.rfind("f,a_mod_f,b_mod_f\n", 0) == 0);
    CHECK(table_a.find("\n2,0,0\n") != std::string::npos);
    CHECK(table_a.find("\n3,0,0\n") != std::string::npos);

    const std::string table_b = appendix_csv(AppendixTable::B);
    CHECK(table_b.find("\n2,1,1\n") != std::string::npos);
    CHECK(table_b.find("\n42,21,21\n") != std::string::npos);
    // the f = 5 and f = 7 blocks of the R table are empty
    std::istringstream in(table_b);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        CHECK(line.rfind("5,", 0) != 0);
        CHECK(line.rfind("7,", 0) != 0);
    }
}

TEST_CASE("emit_appendix writes the same bytes") {
    const std::string path = "appendix_test_tmp.csv";
    emit_appendix(AppendixTable::B, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == appendix_csv(AppendixTable::B));
    std::remove(path.c_str());
}

TEST_CASE("run_census validates n_max") {
    CHECK_THROWS_AS(run_census({Family::T1}, 1, 1), InvalidParams);
}

TEST_CASE("parallel_for propagates exceptions and covers every index") {
    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] = 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(
        parallel_for(8, 3, [](std::size_t i) { if (i == 5) throw std::runtime_error("boom"); }),
        std::runtime_error);
}
