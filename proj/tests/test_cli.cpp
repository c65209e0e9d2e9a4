#include <doctest.h>

#include <sstream>

#include "tiltlab/cli.hpp"
#include "tiltlab/errors.hpp"
#include "tiltlab/serialize.hpp"

using namespace tiltlab;

namespace {

const std::string fx = TILTLAB_FIXTURES;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("quiver JSON round trip") {
  for (const Quiver& q : {fixtures::point(), fixtures::kronecker(), fixtures::triangle(), fixtures::diamond(),
                          fixtures::cube4()}) {
    const Json j = to_json(q);
    const Quiver back = quiver_from_json(Json::parse(j.dump()));
    CHECK(labeled_equal(back, q));
    CHECK(back.name() == q.name());
    CHECK(labeled_equal(read_quiver(j.dump()), q));
  }
  CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"n": 2, "arrows": [[1]]})")), ValidationError);
  CHECK_THROWS_AS(quiver_from_json(Json::parse(R"({"arrows": []})")), ValidationError);
  CHECK_THROWS_AS(read_quiver("{ not json"), ParseError);
}

TEST_CASE("cube JSON round trip") {
  const CubeSubquiver k(2, {{0, 0}, {1, 0}, {1, 1}});
  const Json j = to_json(k);
  CHECK(j["edges"].size() == 2);
  CHECK(cube_from_json(j) == k);
  CHECK_THROWS_AS(cube_from_json(Json::parse(R"({"dim": 1, "nodes": [[3]]})")), ValidationError);
}

TEST_CASE("DOT emission is valid and matches the JSON node count") {
  const auto g = tp_window(fixtures::cube4(), 1);
  const auto dot = hasse_to_dot(g);
  const auto sum = validate_dot(dot);
  CHECK(sum.directed);
  CHECK(sum.nodes == to_json(g)["nodes"].size());
  CHECK(sum.edges == g.edges.size());
  CHECK(sum.clusters == 2);
  CHECK(dot.find("style=dashed") != std::string::npos);

  const auto qd = validate_dot(quiver_to_dot(fixtures::cube4()));
  CHECK(qd.nodes == 4);
  CHECK(qd.edges == 6);

  const auto cd = validate_dot(cube_to_dot(psi(fixtures::cube4())));
  CHECK(cd.nodes == 8);
  CHECK(cd.edges == 12);
}

TEST_CASE("DOT validator rejects malformed input") {
  CHECK_THROWS_AS(validate_dot("digraph { a -> }"), ParseError);
  CHECK_THROWS_AS(validate_dot("digraph { a -- b }"), ParseError);
  CHECK_THROWS_AS(validate_dot("graph { a -> b }"), ParseError);
  CHECK_THROWS_AS(validate_dot("digraph { a [label=] }"), ParseError);
  CHECK_THROWS_AS(validate_dot("digraph { \"open }"), ParseError);
  CHECK_THROWS_AS(validate_dot("digraph { a } extra"), ParseError);
  CHECK_THROWS_AS(validate_dot("tree { }"), ParseError);
  CHECK_NOTHROW(validate_dot("strict digraph G { /* c */ a:p -> {b c} [color=red]; rankdir=LR; }"));
  CHECK(validate_dot("graph { a -- b -- c }").edges == 2);
}

TEST_CASE("documented CLI examples") {
  auto r = run({"tp-window", fx + "/c4.quiver", "--max-shift", "1", "--format", "dot"});
  CHECK(r.code == 0);
  const auto sum = validate_dot(r.out);
  CHECK(sum.nodes == 16);
  CHECK(sum.clusters == 2);
  CHECK(sum.edges == 25);

  r = run({"oracle-check", fx + "/k2.quiver", "--max-shift", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("criterion==oracle: PASS") != std::string::npos);

  r = run({"validate", fx + "/point.quiver"});
  CHECK(r.code == 3);
  CHECK(r.err.find("condition (b) fails at vertex 0") != std::string::npos);
}

TEST_CASE("exit code matrix") {
  CHECK(run({"validate", fx + "/k2.quiver"}).code == 0);
  CHECK(run({"validate", fx + "/cycle.quiver"}).code == 2);
  CHECK(run({"validate", fx + "/loop.quiver"}).code == 2);
  CHECK(run({"validate", fx + "/two_sources.quiver"}).code == 3);
  CHECK(run({"validate", fx + "/missing.quiver"}).code == 2);
  CHECK(run({"l-matrix", fx + "/d4.quiver", "--format", "dot"}).code == 2);
  CHECK(run({"tp-window", fx + "/c4.quiver", "--max-shift", "-1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"psi", fx + "/d4.quiver"}).code == 3);
  CHECK(run({"enumerate-lk", fx + "/t3.quiver", "--vertex", "7"}).code == 2);
  CHECK(run({"ext", fx + "/k6.quiver", "0", "40", "0", "0"}).code == 4);
  CHECK(run({"ext", fx + "/k2.quiver", "1", "1", "0", "0"}).code == 0);
  CHECK(run({"ext", fx + "/k2.quiver", "1", "1", "0"}).code == 2);
  CHECK(run({"psi-inverse", fx + "/antichain_corners.cube.json"}).code == 3);
  CHECK(run({"psi-inverse", fx + "/k2.quiver"}).code == 2);
  CHECK(run({"verify-theorem", fx + "/t3.quiver", "--max-shift", "1"}).code == 2);
  CHECK(run({"commute", fx + "/point.quiver", fx + "/k2.quiver", "--mode", "literal"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("help carries the JSON shapes") {
  const auto r = run({"--help"});
  CHECK(r.out.find("\"l_max\"") != std::string::npos);
  CHECK(r.out.find("TILTLAB_COLOR") != std::string::npos);
}

TEST_CASE("ext reports both dimensions") {
  const auto r = run({"ext", fx + "/k2.quiver", "1", "1", "0", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["ext"] == 2);
  CHECK(j["criterion"] == false);
}

TEST_CASE("unnormalized input is relabelled for knitting") {
  // K2 written with the arrows pointing up
  const auto r = run({"ext", fx + "/k2_reversed.quiver", "1", "1", "1", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["ext"] == 1);
}

TEST_CASE("subcommand outputs") {
  auto r = run({"enumerate-lk", fx + "/d4.quiver"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count: 6") != std::string::npos);

  r = run({"psi", fx + "/c4.quiver", "--format", "json"});
  CHECK(Json::parse(r.out)["nodes"].size() == 8);

  r = run({"decompose", fx + "/t3.quiver", "--format", "json"});
  CHECK(Json::parse(r.out)["pieces"].size() == 3);

  r = run({"psi-inverse", fx + "/chain3.cube.json"});
  CHECK(r.code == 0);
  CHECK(labeled_equal(parse_quiver(r.out), fixtures::triangle()));

  r = run({"same-tp", fx + "/t3.quiver", fx + "/k2.quiver", "--verify", "oracle", "--format", "json"});
  CHECK(Json::parse(r.out)["same"] == true);
  CHECK(Json::parse(r.out)["windows_isomorphic"] == true);

  r = run({"normal-form", fx + "/c4.quiver", "--verify", "oracle", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(labeled_equal(parse_quiver(r.out), fixtures::cube4()));

  r = run({"hasse", fx + "/c4.quiver", "--verify", "oracle", "--format", "json"});
  CHECK(Json::parse(r.out)["edges"].size() == 12);

  r = run({"verify-theorem", fx + "/c4.quiver"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
