#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lolab/json_io.hpp"
#include "lolab/pipeline.hpp"

using namespace lolab;

TEST_CASE("config parsing: angles take precedence") {
    const auto j = ordered_json::parse(R"({"angles": [0.0, 1.5707963267948966],
                                           "vectors": [[1, 0]]})");
    const auto cfg = config_from_json(j);
    CHECK(cfg.size() == 2);
    CHECK(cfg[1].y() == doctest::Approx(1.0));
}

TEST_CASE("config parsing: rational mode validates the Pythagorean identity") {
    const auto good = ordered_json::parse(
        R"({"rational": {"scale": 5, "pairs": [[3, 4], [-5, 0]]}})");
    const auto cfg = config_from_json(good);
    CHECK(cfg.is_exact());
    CHECK(cfg[0].x() == doctest::Approx(0.6));

    const auto bad = ordered_json::parse(
        R"({"rational": {"scale": 2, "pairs": [[1, 1]]}})");
    CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);

    CHECK_THROWS_AS(config_from_json(ordered_json::parse("{}")), std::invalid_argument);
}

TEST_CASE("configuration round trip through json") {
    const auto cfg = Configuration::from_angles({0.1, 2.2, 4.4, 5.9});
    const auto j = config_to_json(cfg);
    const std::string text = dump_json17(j);
    const auto back = config_from_json(ordered_json::parse(text));
    REQUIRE(back.size() == cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        CHECK(back[i].x() == cfg[i].x());
        CHECK(back[i].y() == cfg[i].y());
    }
}

TEST_CASE("rational round trip keeps exact mode") {
    RationalCoords rc;
    rc.scale = 5;
    rc.pairs = {{3, 4}, {0, 5}, {-4, 3}};
    const auto cfg = Configuration::from_rational(rc);
    const auto back = config_from_json(ordered_json::parse(dump_json17(config_to_json(cfg))));
    CHECK(back.is_exact());
    CHECK(back.rational().scale == 5);
    CHECK(back.rational().pairs == rc.pairs);
}

TEST_CASE("dump_json17 prints doubles losslessly and deterministically") {
    ordered_json j;
    j["a"] = 0.1;
    j["b"] = 1.0 / 3.0;
    j["c"] = 1e-300;
    j["list"] = {1.5, 2.0, 0.75};
    const std::string s1 = dump_json17(j);
    const std::string s2 = dump_json17(j);
    CHECK(s1 == s2);
    const auto back = ordered_json::parse(s1);
    CHECK(back["a"].get<double>() == 0.1);
    CHECK(back["b"].get<double>() == 1.0 / 3.0);
    CHECK(back["c"].get<double>() == 1e-300);
}

TEST_CASE("certificate serialization carries the whole chain") {
    const auto cert = certify(Configuration::from_angles({0.0, 0.0, 0.0, 0.0}), 1.4142135623730951);
    const auto j = to_json(cert);
    CHECK(j["branch"] == "CloseEvenEven");
    CHECK(j["bound"].get<double>() == cert.bound);
    CHECK(j["trace"].is_array());
    CHECK(j["trace"].size() == cert.trace.size());
    CHECK(j["constants"].contains("gamma"));
    const std::string text = dump_json17(j);
    CHECK(ordered_json::parse(text)["bound"].get<double>() == cert.bound);
}

TEST_CASE("rational serialization uses decimal strings") {
    const auto j = rational_to_json(mpq_class(3, 4));
    CHECK(j["num"] == "3");
    CHECK(j["den"] == "4");
}
