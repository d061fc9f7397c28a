#include <doctest.h>

#include <string>

#include <json.hpp>

#include "cremona.h"

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { crm_string_free(s); }
};

struct Map {
    crm_map* m = nullptr;
    ~Map() { crm_map_free(m); }
};

struct Pts {
    crm_points* p = nullptr;
    ~Pts() { crm_points_free(p); }
};

const char* kSigma = R"({
  "schema": "cremona.map/1",
  "degree": 2,
  "f": [
    [{"exp": [0, 1, 1], "coef": "1"}],
    [{"exp": [1, 0, 1], "coef": "1"}],
    [{"exp": [1, 1, 0], "coef": "1"}]
  ]
})";

} // namespace

TEST_CASE("c api: admissibility codes") {
    const long long sym5[] = {0, 6, 0, 0};
    CHECK(crm_admissible(sym5, 4, nullptr) == CRM_OK);

    const long long counterexample[] = {6, 0, 2, 0};
    long long step = 0;
    CHECK(crm_admissible(counterexample, 4, &step) == CRM_ERR_REDUCIBLE);
    CHECK(step == 1);

    const long long bad_selfint[] = {1, 0};
    CHECK(crm_admissible(bad_selfint, 2, nullptr) == CRM_ERR_NOETHER_SELFINT);

    const long long bad_genus[] = {8, 0};
    CHECK(crm_admissible(bad_genus, 2, nullptr) == CRM_ERR_NOETHER_GENUS);

    const long long negative[] = {-1, 2};
    CHECK(crm_admissible(negative, 2, nullptr) == CRM_ERR_INVALID);
    CHECK(std::string(crm_last_error()).find("non-negative") != std::string::npos);

    CHECK(crm_admissible(nullptr, 0, nullptr) == CRM_ERR_INVALID);
}

TEST_CASE("c api: map lifecycle and composition") {
    Map sigma;
    REQUIRE(crm_map_parse_json(kSigma, &sigma.m) == CRM_OK);

    long long degree = 0;
    CHECK(crm_map_degree(sigma.m, &degree) == CRM_OK);
    CHECK(degree == 2);

    Str rendered;
    REQUIRE(crm_map_render_json(sigma.m, &rendered.s) == CRM_OK);
    Map again;
    REQUIRE(crm_map_parse_json(rendered.s, &again.m) == CRM_OK);
    Str rendered2;
    REQUIRE(crm_map_render_json(again.m, &rendered2.s) == CRM_OK);
    CHECK(std::string(rendered.s) == rendered2.s);

    Map raw;
    REQUIRE(crm_map_compose(sigma.m, sigma.m, 0, &raw.m) == CRM_OK);
    CHECK(crm_map_degree(raw.m, &degree) == CRM_OK);
    CHECK(degree == 4);

    Map stripped;
    REQUIRE(crm_map_compose(sigma.m, sigma.m, 1, &stripped.m) == CRM_OK);
    CHECK(crm_map_degree(stripped.m, &degree) == CRM_OK);
    CHECK(degree == 1);

    int verified = 0;
    CHECK(crm_map_verify_pair(sigma.m, sigma.m, &verified) == CRM_OK);
    CHECK(verified == 1);

    int nonzero = 0;
    CHECK(crm_map_jacobian_nonzero(sigma.m, &nonzero) == CRM_OK);
    CHECK(nonzero == 1);

    CHECK(crm_map_parse_json("{", &again.m) == CRM_ERR_PARSE);
}

TEST_CASE("c api: points, multiplicities, factorization, inverse") {
    Map sigma;
    REQUIRE(crm_map_parse_json(kSigma, &sigma.m) == CRM_OK);

    const char* pts_text = R"({
      "schema": "cremona.points/1",
      "points": [
        {"p": ["1", "0", "0"], "mult": 1},
        {"p": ["0", "1", "0"], "mult": 1},
        {"p": ["0", "0", "1"], "mult": 1}
      ]
    })";
    Pts pts;
    REQUIRE(crm_points_parse_json(pts_text, &pts.p) == CRM_OK);

    Str mults;
    REQUIRE(crm_map_multiplicities_json(sigma.m, pts.p, &mults.s) == CRM_OK);
    CHECK(std::string(mults.s).find("\"all_match\": true") != std::string::npos);

    Str factored;
    REQUIRE(crm_map_factor_json(sigma.m, pts.p, &factored.s) == CRM_OK);
    CHECK(std::string(factored.s).find("\"recomposition_ok\": true") != std::string::npos);

    Map inv;
    REQUIRE(crm_map_invert(sigma.m, pts.p, &inv.m) == CRM_OK);
    int verified = 0;
    CHECK(crm_map_verify_pair(sigma.m, inv.m, &verified) == CRM_OK);
    CHECK(verified == 1);

    // missing base points are a mathematical failure, not a crash
    const char* short_text = R"({
      "schema": "cremona.points/1",
      "points": [{"p": ["1", "0", "0"], "mult": 1}]
    })";
    Pts short_pts;
    REQUIRE(crm_points_parse_json(short_text, &short_pts.p) == CRM_OK);
    Str out;
    CHECK(crm_map_factor_json(sigma.m, short_pts.p, &out.s) == CRM_ERR_MATH);
}

TEST_CASE("c api: census and dimensions") {
    Str census;
    REQUIRE(crm_census_json(4, nullptr, &census.s) == CRM_OK);
    const std::string text = census.s;
    CHECK(text.find("\"degree\": 4") != std::string::npos);
    CHECK(text.find("\"n_components\": 2") != std::string::npos);
    CHECK(crm_census_json(1, nullptr, &census.s) == CRM_ERR_INVALID);

    long long v = 0;
    CHECK(crm_dim_biro(5, &v) == CRM_OK);
    CHECK(v == 26);
    CHECK(crm_dim_bir(7, &v) == CRM_OK);
    CHECK(v == 35);
    CHECK(crm_dim_bira(3, 2, &v) == CRM_OK);
    CHECK(v == 13);
    CHECK(crm_dim_bira(3, 3, &v) == CRM_ERR_INVALID);

    Str dir;
    CHECK(crm_default_cache_dir(&dir.s) == CRM_OK);
    CHECK(dir.s != nullptr);

    Str deg10;
    REQUIRE(crm_census_json(10, nullptr, &deg10.s) == CRM_OK);
    const auto doc = nlohmann::json::parse(deg10.s);
    int hits = 0;
    for (const auto& c : doc["components"]) {
        if (c["htype"] == nlohmann::json::array({0, 0, 7, 0, 0, 1, 0, 0, 0})) ++hits;
        if (c["htype"] == nlohmann::json::array({3, 0, 0, 6, 0, 0, 0, 0, 0})) ++hits;
    }
    CHECK(hits == 2);
}

TEST_CASE("c api: bundled fixtures") {
    Str list;
    REQUIRE(crm_fixtures_list_json(&list.s) == CRM_OK);
    CHECK(std::string(list.s).find("bir4_t1") != std::string::npos);

    Map m;
    REQUIRE(crm_fixture_map("bir5_t0", &m.m) == CRM_OK);
    long long degree = 0;
    CHECK(crm_map_degree(m.m, &degree) == CRM_OK);
    CHECK(degree == 5);
    CHECK(crm_fixture_map("nope", &m.m) == CRM_ERR_INVALID);

    Str report;
    int all = 0;
    REQUIRE(crm_fixtures_run_json(&report.s, &all) == CRM_OK);
    CHECK(all == 1);
    CHECK(std::string(report.s).find("\"all_passed\": true") != std::string::npos);
}
