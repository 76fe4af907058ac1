#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>

#include "nfsos/report.hpp"
#include "oracles.hpp"

using namespace nfsos;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::string& f, const std::string& a, bool as_json = true, bool length_only = false) {
  RunConfig c;
  c.field_poly = f;
  c.element = a;
  c.json = as_json;
  c.length_only = length_only;
  std::ostringstream out, err;
  int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("run examples", "[cli]") {
  auto r = call("x^2+1", "5");
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["field"] == "x^2+1");
  CHECK(j["element"] == "5");
  CHECK(j["level"] == 1);
  CHECK(j["length"] == 2);
  CHECK(j["summands"].size() == 2);
  CHECK(j["verified"] == true);

  r = call("x-1", "-3");
  CHECK(r.code == kExitNotSum);
  j = json::parse(r.out);
  CHECK(j["error"] == "NotASumOfSquares");
  CHECK(j["witness"].is_object());

  CHECK(call("x^2-4", "1").code == kExitInput);
  CHECK(call("x^2+1", "1+").code == kExitInput);
  CHECK(call("x^2+1", "0").code == kExitInput);
  CHECK(call("x^2+3", "2").code == kExitScope);
}

TEST_CASE("JSON key order and infinity", "[cli]") {
  auto r = call("x", "7");
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("\"field\"") < r.out.find("\"element\""));
  CHECK(r.out.find("\"element\"") < r.out.find("\"level\""));
  CHECK(r.out.find("\"length\"") < r.out.find("\"summands\""));
  auto j = json::parse(r.out);
  CHECK(j["level"] == "infinity");
  CHECK(j["length"] == 4);

  r = call("x^2+x+2", "-1", true, true);
  REQUIRE(r.code == kExitOk);
  j = json::parse(r.out);
  CHECK(j["length"] == 4);
  CHECK_FALSE(j.contains("summands"));
}

TEST_CASE("text output", "[cli]") {
  auto r = call("x^2+2", "-1", false);
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("length") != std::string::npos);
  r = call("x-1", "-3", false);
  CHECK(r.code == kExitNotSum);
  CHECK(r.err.find("NotASumOfSquares") != std::string::npos);
}

TEST_CASE("verify round trip", "[cli][property]") {
  for (auto [f, a] : std::vector<std::pair<const char*, const char*>>{
           {"x^2+1", "5"}, {"x", "7"}, {"x^2-2", "3+x"}, {"x^2+x+2", "-1"}, {"x^3-2", "1/3*x^2+5"}}) {
    auto r = call(f, a);
    REQUIRE(r.code == kExitOk);
    std::ostringstream out, err;
    CHECK(verify_json(r.out, out, err) == kExitOk);
    auto j = json::parse(r.out);
    std::vector<std::string> s = j["summands"];
    CHECK(verify(f, a, s, out, err) == kExitOk);
    s[0] = s[0] + "+1";
    CHECK(verify(f, a, s, out, err) == kExitMismatch);
  }
}

TEST_CASE("exit code mapping", "[cli]") {
  CHECK(exit_code_for(ErrorKind::ParseError) == kExitInput);
  CHECK(exit_code_for(ErrorKind::ReduciblePolynomial) == kExitInput);
  CHECK(exit_code_for(ErrorKind::NonMonic) == kExitInput);
  CHECK(exit_code_for(ErrorKind::NotASumOfSquares) == kExitNotSum);
  CHECK(exit_code_for(ErrorKind::NonMaximalOrderAtP) == kExitScope);
  CHECK(exit_code_for(ErrorKind::DiscriminantTooLarge) == kExitScope);
  CHECK(exit_code_for(ErrorKind::PrimeSearchExhausted) == kExitSearch);
  CHECK(exit_code_for(ErrorKind::SearchBoundExceeded) == kExitSearch);
  CHECK(exit_code_for(ErrorKind::Internal) == kExitInternal);
}
