#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "census_io.hpp"
#include "fixtures.hpp"
#include "form_parse.hpp"
#include "mapdoc.hpp"
#include "testutil.hpp"

using namespace cremona;
namespace fs = std::filesystem;

namespace {

CremonaMap random_map(testutil::Rng& rng) {
    const int d = static_cast<int>(rng.int_in(1, 4));
    while (true) {
        const Form f1 = rng.form(d);
        const Form f2 = rng.form(d);
        const Form f3 = rng.form(d);
        if (f1.is_zero() && f2.is_zero() && f3.is_zero()) continue;
        return CremonaMap(f1, f2, f3);
    }
}

} // namespace

TEST_CASE("map documents round-trip byte-exactly") {
    testutil::Rng rng(112358);
    for (int trial = 0; trial < 20; ++trial) {
        const CremonaMap m = random_map(rng);
        const std::string text = render_map_json(m);
        const CremonaMap back = parse_map_json(text);
        CHECK(back.components() == m.components());
        CHECK(render_map_json(back) == text);
    }
}

TEST_CASE("map document validation") {
    CHECK_THROWS_AS(parse_map_json("not json"), Error);
    CHECK_THROWS_AS(parse_map_json("{}"), Error);
    CHECK_THROWS_AS(parse_map_json(R"({"schema":"cremona.map/1","degree":2,"f":[[],[],[]]})"), Error);
    // exponent sum disagrees with the degree
    CHECK_THROWS_AS(parse_map_json(R"({"schema":"cremona.map/1","degree":2,
        "f":[[{"exp":[1,0,0],"coef":"1"}],[],[]]})"),
                    Error);
    // zero coefficient
    CHECK_THROWS_AS(parse_map_json(R"({"schema":"cremona.map/1","degree":1,
        "f":[[{"exp":[1,0,0],"coef":"0"}],[],[]]})"),
                    Error);
    // duplicate exponent triple
    CHECK_THROWS_AS(parse_map_json(R"({"schema":"cremona.map/1","degree":1,
        "f":[[{"exp":[1,0,0],"coef":"1"},{"exp":[1,0,0],"coef":"2"}],[],[]]})"),
                    Error);
    // wrong schema
    CHECK_THROWS_AS(parse_map_json(R"({"schema":"cremona.map/2","degree":1,
        "f":[[{"exp":[1,0,0],"coef":"1"}],[],[]]})"),
                    Error);
}

TEST_CASE("points documents round-trip") {
    const AssignedBasePoints bp({{ProjPoint(0, 0, 1), 2}, {ProjPoint(make_rational(1, 2), 3, 1), 1}});
    const std::string text = render_points_json(bp);
    const AssignedBasePoints back = parse_points_json(text);
    REQUIRE(back.size() == 2);
    CHECK(back.entries()[0].point == bp.entries()[0].point);
    CHECK(back.entries()[0].multiplicity == 2);
    CHECK(back.entries()[1].point == bp.entries()[1].point);
    CHECK(render_points_json(back) == text);

    CHECK_THROWS_AS(parse_points_json(R"({"schema":"cremona.points/1","points":[{"p":["0","0","0"],"mult":1}]})"),
                    Error);
    CHECK_THROWS_AS(parse_points_json(R"({"schema":"cremona.points/1","points":[{"p":["0","0","1"],"mult":0}]})"),
                    Error);
}

TEST_CASE("census documents carry the expected content") {
    const std::string text = census_json(5);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["schema"] == kCensusSchema);
    CHECK(doc["degree"] == 5);
    CHECK(doc["n_components"] == 3);
    CHECK(doc["noether_solutions"].size() == 4);
    CHECK(doc["dims"]["biro"] == 26);
    CHECK(doc["dims"]["bir"] == 26);
    CHECK(doc["components"][0]["htype"] == nlohmann::json::array({8, 0, 0, 1}));
    CHECK(doc["components"][0]["dimension"] == 26);
    bool saw_reducible = false;
    for (const auto& rec : doc["noether_solutions"]) {
        if (rec["counts"] == nlohmann::json::array({6, 0, 2, 0})) {
            saw_reducible = true;
            CHECK(rec["admissible"] == false);
            CHECK(rec["reason"] == "reducible");
            CHECK(rec["reducible_at_step"] == 1);
        }
    }
    CHECK(saw_reducible);
}

TEST_CASE("census cache regenerates byte-identically") {
    const fs::path dir = fs::temp_directory_path() / "cremona-census-cache-test";
    fs::remove_all(dir);

    const std::string first = census_cached(6, dir.string());
    const fs::path file = census_cache_path(dir.string(), 6);
    REQUIRE(fs::exists(file));

    std::ifstream in(file, std::ios::binary);
    const std::string on_disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(on_disk == first);

    const std::string second = census_cached(6, dir.string()); // served from disk
    CHECK(second == first);

    fs::remove_all(dir);
    const std::string third = census_cached(6, dir.string()); // regenerated
    CHECK(third == first);

    // a corrupt cache file is replaced, not trusted
    {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << "{\"schema\":\"something-else\"}";
    }
    const std::string fourth = census_cached(6, dir.string());
    CHECK(fourth == first);
    fs::remove_all(dir);
}

TEST_CASE("committed fixture documents match the embedded maps byte-exactly") {
    const fs::path dir = fs::path(FIXTURE_DATA_DIR);
    REQUIRE(fs::exists(dir));
    auto check_one = [&](const FixtureMap& f) {
        const fs::path file = dir / (f.name + ".json");
        CAPTURE(f.name);
        REQUIRE(fs::exists(file));
        std::ifstream in(file, std::ios::binary);
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text == render_map_json(f.map));
    };
    for (const FixtureMap& f : fixtures()) check_one(f);
    for (const FixtureMap& f : derived_inverse_fixtures()) check_one(f);
}
