#include "visang/report.hpp"

#include "visang/errors.hpp"
#include "visang/presets.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

using namespace visang;

TEST_CASE("fmt17 round-trips doubles") {
    for (double v : {std::numbers::pi, 1.0 / 3.0, 6.283185307179586, -1e-30, 0.0})
        CHECK(std::stod(fmt17(v)) == v);
}

namespace {
std::vector<IdentityReport> sample_reports() {
    IdentityReport a;
    a.identity = "crofton";
    a.route = "exterior";
    a.body_desc = "disk:1";
    a.lhs = 4.0 * std::numbers::pi * std::numbers::pi;
    a.rhs = a.lhs + 1e-9;
    a.terms.emplace_back("area", std::numbers::pi);
    a.quadrature.emplace_back("angular_n", 256.0);
    a.wall_time_s = 0.321;
    a.finish();
    IdentityReport b;
    b.identity = "antipi";
    b.route = "split";
    b.body_desc = "generic";
    b.k = 3;
    b.lhs = 0.024674;
    b.rhs = 0.024675;
    b.wall_time_s = 1.5;
    b.finish();
    return {a, b};
}
} // namespace

TEST_CASE("report serialisation: csv header frozen, json parses back") {
    const auto reports = sample_reports();
    const std::string csv = reports_to_csv(reports, true);
    CHECK(csv.rfind("identity,route,body,k,m,lhs,rhs,abs_err,rel_err,wall_time_s\n", 0) == 0);
    CHECK(csv.find("crofton,exterior,disk:1,0,0,") != std::string::npos);

    // body descriptors with commas must be quoted
    IdentityReport q;
    q.identity = "masotti";
    q.route = "exterior";
    q.body_desc = "shifted_disk:1,0.3";
    q.finish();
    const std::string quoted = reports_to_csv({q}, false);
    CHECK(quoted.find("masotti,exterior,\"shifted_disk:1,0.3\",0,0,") != std::string::npos);

    const std::string js = reports_to_json(reports, true);
    const auto doc = nlohmann::json::parse(js);
    CHECK(doc["schema"] == "visang-report-v1");
    REQUIRE(doc["reports"].size() == 2);
    CHECK(doc["reports"][0]["identity"] == "crofton");
    CHECK(doc["reports"][0]["lhs"].get<double>() == reports[0].lhs);
    CHECK(doc["reports"][1]["params"]["k"] == 3);

    // timing suppression zeroes the only nondeterministic field
    const std::string quiet = reports_to_json(reports, false);
    const auto qdoc = nlohmann::json::parse(quiet);
    CHECK(qdoc["reports"][0]["wall_time_s"].get<double>() == 0.0);
    const std::string quiet_csv = reports_to_csv(reports, false);
    CHECK(quiet_csv.find("0.321") == std::string::npos);
}

TEST_CASE("csv and json carry the same numbers to full precision") {
    const auto reports = sample_reports();
    const auto doc = nlohmann::json::parse(reports_to_json(reports, false));
    const std::string csv = reports_to_csv(reports, false);
    // lhs of the first report appears identically when reparsed
    const double json_lhs = doc["reports"][0]["lhs"].get<double>();
    CHECK(csv.find(fmt17(json_lhs)) != std::string::npos);
}

TEST_CASE("presets and body json io") {
    CHECK(body_from_preset("disk:2").body.a0() == doctest::Approx(2.0));
    CHECK(body_from_preset("shifted_disk:1,0.3").body.cos_coeff(1) == doctest::Approx(0.3));
    CHECK(body_from_preset("const_width:1,0.1").body.cos_coeff(3) == doctest::Approx(0.1));
    CHECK(body_from_preset("generic").body.sin_coeff(3) == doctest::Approx(0.05));
    CHECK_THROWS_AS(body_from_preset("badname"), BadParamError);
    CHECK_THROWS_AS(body_from_preset("disk:1,2"), BadParamError);
    CHECK_THROWS_AS(body_from_preset("ellipse:2"), BadParamError);

    const SupportBody gen = body_from_preset("generic").body;
    const SupportBody back = body_from_json(body_to_json(gen));
    CHECK(back.a0() == gen.a0());
    for (std::size_t k = 1; k <= gen.degree(); ++k) {
        CHECK(back.cos_coeff(k) == gen.cos_coeff(k));
        CHECK(back.sin_coeff(k) == gen.sin_coeff(k));
    }

    const SupportBody k3 = body_from_json(R"({"a0": 1.0, "a": [0, 0, 0.1], "b": []})");
    CHECK(perimeter(k3) == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(area(k3) == doctest::Approx(std::numbers::pi * 0.96));

    CHECK_THROWS_AS(body_from_json("{"), BadParamError);
    CHECK_THROWS_AS(body_from_json(R"({"a": [1]})"), BadParamError);
}

TEST_CASE("suite composition") {
    const auto suite = standard_suite();
    REQUIRE(suite.size() == 5);
    CHECK(suite[0].desc == "disk:1");
    CHECK(suite[2].body.spectrum().at(2) > 0.0);
    CHECK(suite[3].body.spectrum().at(3) == doctest::Approx(0.01));
}
