#include <doctest.h>

#include <cmath>
#include <optional>

#include "scherk/report.hpp"
#include "support.hpp"

using namespace scherk;

namespace {

std::optional<ErrorCode> code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("parse vertex input") {
  const Input in = parse_input_json(R"({"vertices": [[0,0],[1,0],[1,1],[0,1]]})");
  REQUIRE(in.vertices.has_value());
  CHECK_FALSE(in.params.has_value());
  CHECK((*in.vertices)[2] == cplx(1.0, 1.0));
  const ScherkSurface sf = build_surface(in);
  CHECK(sf.coords.m == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("parse parameter input") {
  const Input in = parse_input_json(R"({"m": 0.3, "s": 1, "t": -0.3})");
  REQUIRE(in.params.has_value());
  CHECK((*in.params)[2] == -0.3);
  const Input flag = parse_params_flag("0.3,1,-0.3");
  REQUIRE(flag.params.has_value());
  CHECK(*flag.params == *in.params);
}

TEST_CASE("input errors") {
  for (const char* bad : {"", "[1,2]", "{\"vertices\": [[0,0],[1,0],[1,1]]}", "{\"vertices\": [[0,0],[1,0],[1,1],[0]]}",
                          "{\"m\": 0.3, \"s\": 1}", "{\"m\": \"x\", \"s\": 1, \"t\": 0}", "{not json"})
    CHECK(code_of([&] { parse_input_json(bad); }) == ErrorCode::InvalidInput);
  for (const char* bad : {"", "0.3,1", "0.3,1,0.2,4", "a,b,c", "0.3,,1"})
    CHECK(code_of([&] { parse_params_flag(bad); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { build_surface(Input{}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { read_input_file("/nonexistent/scherk.json"); }) == ErrorCode::IoError);
  const Input rect = parse_input_json(R"({"vertices": [[0,0],[2,0],[2,1],[0,1]]})");
  CHECK(code_of([&] { build_surface(rect); }) == ErrorCode::NotPitot);
}

TEST_CASE("deterministic dump") {
  nlohmann::json j;
  j["zeta"] = 0.1;
  j["alpha"] = {{"b", 1.0 / 3.0}, {"a", 2}};
  j["mid"] = std::numeric_limits<double>::infinity();
  const std::string out = dump_deterministic(j);
  CHECK(out.find("\"alpha\"") < out.find("\"mid\""));
  CHECK(out.find("\"mid\"") < out.find("\"zeta\""));
  CHECK(out.find("\"a\"") < out.find("\"b\""));
  CHECK(out.find("0.33333333333333331") != std::string::npos);
  CHECK(out.find("0.10000000000000001") != std::string::npos);
  CHECK(out.find("null") != std::string::npos);
  CHECK(out.find('\r') == std::string::npos);
}

TEST_CASE("analysis report contents") {
  const Input in = parse_params_flag("0.3,1,0.3");
  const ScherkSurface sf = build_surface(in);
  const nlohmann::json r = analysis_report(sf, in, {});
  for (const char* key : {"input", "quadrilateral", "p", "z0", "X", "constants", "c0", "center", "verification"})
    CHECK(r.contains(key));
  CHECK(r["c0"]["re"].get<double>() == doctest::Approx(0.29893383263522005).epsilon(1e-13));
  CHECK(r["c0"]["im"].get<double>() == doctest::Approx(0.55244574206848485).epsilon(1e-13));
  CHECK(dump_deterministic(r) == dump_deterministic(analysis_report(build_surface(in), in, {})));
}
