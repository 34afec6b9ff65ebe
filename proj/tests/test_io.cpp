#include "doctest.h"
#include "tss/constructions.hpp"
#include "tss/error.hpp"
#include "tss/families.hpp"
#include "tss/io.hpp"

using namespace tss;
using nlohmann::json;

namespace {

ErrorKind parse_error(const std::string& text) {
  try {
    parse_graph_document(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::BadParam;
}

}  // namespace

TEST_CASE("graph documents round-trip") {
  for (const auto& g : {torus_cordalis(4, 3), generalized_petersen(5, 2), path(1), cycle(7)}) {
    const auto theta = strict_majority_threshold(g);
    const auto doc = graph_to_json(g, &theta);
    CHECK(doc["format"] == "tss-graph-v1");
    const auto back = parse_graph_document(doc.dump());
    CHECK(back.graph == g);
    CHECK(back.graph.labels() == g.labels());
    REQUIRE(back.thresholds.has_value());
    CHECK(*back.thresholds == theta);
  }
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  const auto plain = graph_to_json(build_graph(3, tri));
  CHECK_FALSE(plain.contains("thresholds"));
  CHECK_FALSE(plain.contains("labels"));
  CHECK_FALSE(parse_graph_document(plain.dump()).thresholds.has_value());
}

TEST_CASE("malformed graph documents") {
  CHECK(parse_error("not json") == ErrorKind::Parse);
  CHECK(parse_error(R"({"format":"other","n":2,"edges":[]})") == ErrorKind::Parse);
  CHECK(parse_error(R"({"format":"tss-graph-v1","edges":[]})") == ErrorKind::Parse);
  CHECK(parse_error(R"({"format":"tss-graph-v1","n":2,"edges":[[0]]})") == ErrorKind::Parse);
  CHECK(parse_error(R"({"format":"tss-graph-v1","n":2,"edges":[[0,0]]})") == ErrorKind::SelfLoop);
  CHECK(parse_error(R"({"format":"tss-graph-v1","n":2,"edges":[[0,2]]})") == ErrorKind::VertexOutOfRange);
  CHECK(parse_error(R"({"format":"tss-graph-v1","n":2,"edges":[],"labels":{"0":"a"}})") == ErrorKind::Parse);
  CHECK(parse_error(R"({"format":"tss-graph-v1","n":2,"edges":[],"labels":{"0":"a","1":"a"}})") ==
        ErrorKind::DuplicateLabel);
  CHECK(parse_error(R"({"format":"tss-graph-v1","n":2,"edges":[],"thresholds":[1]})") == ErrorKind::SizeMismatch);
  CHECK(parse_error(R"({"format":"tss-graph-v1","n":2,"edges":[],"thresholds":[1,-1]})") == ErrorKind::BadParam);
}

TEST_CASE("trace and report documents") {
  const auto g = path(3);
  const std::vector<VertexId> mid{1};
  const auto trace = parallel_trace(g, constant_threshold(g, 1), VertexSet(3, mid));
  CHECK(trace_to_json(trace) == json::parse(R"({"seed":[1],"rounds":[[0,2]],"final_size":3})"));

  const auto report = seed_torus_cordalis(12, 14);
  const auto doc = seed_report_to_json(report);
  CHECK(doc["size"] == 57);
  CHECK(doc["kind"] == "exact");
  CHECK(doc["case"] == "T9even");
  CHECK(doc["lower_bound"] == 57);
  CHECK(doc["verified"] == true);
  CHECK(doc["seed"].size() == 57);
  CHECK(doc["m"] == 12);
  CHECK(doc["n"] == 14);
  CHECK(seed_report_to_json(seed_generalized_petersen(7, 3))["s"] == 3);

  BoundsReport open;
  open.lower = 3;
  CHECK(bounds_to_json(open)["upper"].is_null());
}

TEST_CASE("DOT output uses display labels") {
  const auto g = torus_cordalis(3, 2);
  VertexSet seed(6);
  seed.insert(0);
  const auto dot = to_dot(g, &seed, "t");
  CHECK(dot.find("graph \"t\" {") == 0);
  CHECK(dot.find("0 [label=\"(1,1)\", style=filled") != std::string::npos);
  CHECK(dot.find("1 [label=\"(1,2)\"];") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
}
