#include <doctest.h>

#include "cospans/enumerate.hpp"
#include "cospans/json_io.hpp"

using namespace cospans;

TEST_CASE("round-trips are exact for every kind") {
  Lcg rng(101);
  std::vector<WorkspaceValue> values;
  values.push_back(make_set({"b", "a", "c"}));
  values.push_back(FinSet{});
  values.push_back(fold_fn(make_set({"u", "v"})));
  for (int i = 0; i < 20; ++i) values.push_back(random_cospan(rng, 5));
  values.push_back(identity_cell(random_cospan(rng, 4)));
  values.push_back(double_fold_square(make_set({"x0", "x1"})));
  values.push_back(canonical_algebra(make_set({"x0", "x1"})));
  values.push_back(canonical_envbm_object(1, 2, 0));
  values.push_back(envbm_generators().front());

  for (const auto& v : values) {
    json serialized = value_to_json(v);
    WorkspaceValue back = value_from_json(json::parse(serialized.dump()));
    CHECK(value_to_json(back) == serialized);
  }
}

TEST_CASE("serialization is byte-stable") {
  Lcg rng(5);
  Cospan c = random_cospan(rng, 4);
  CHECK(to_json(c).dump(2) == to_json(c).dump(2));
}

TEST_CASE("workspace parsing") {
  SUBCASE("the empty file list gives an empty workspace") {
    CHECK(parse_workspace(std::vector<std::string>{}).bindings.empty());
  }

  SUBCASE("values load by name and resolve by kind") {
    Workspace ws = parse_workspace(std::vector<std::string>{
        R"({"A": {"set": {"elements": ["a0", "a1"]}}})",
         R"({"f": {"fn": {"dom": {"set": {"elements": ["a0"]}},
                          "cod": {"set": {"elements": ["a0"]}},
                          "map": {"a0": "a0"}}}})"});
    CHECK(ws.get_as<FinSet>("A", "set").size() == 2);
    CHECK(ws.get_as<FinFn>("f", "fn") == FinFn::identity(make_set({"a0"})));
    CHECK_THROWS_AS(ws.get("missing"), UnknownName);
    CHECK_THROWS_AS(ws.get_as<FinFn>("A", "fn"), TypeMismatch);
  }

  SUBCASE("duplicate names are rejected") {
    CHECK_THROWS_AS(
        parse_workspace(std::vector<std::string>{
            R"({"A": {"set": {"elements": []}}})",
            R"({"A": {"set": {"elements": []}}})"}),
        ParseError);
  }

  SUBCASE("a malformed fiber order names the offending key") {
    std::string bad = R"({"m": {"envbm_mor": {
      "src": {"envbm_obj": {"L": ["l0"], "M": [], "R": []}},
      "tgt": {"envbm_obj": {"L": ["l0"], "M": [], "R": []}},
      "map": {"l0": "l0"},
      "orders": {"l0": 5}}}})";
    try {
      parse_workspace(std::vector<std::string>{bad});
      FAIL("expected a ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("orders.l0") != std::string::npos);
    }
  }

  SUBCASE("unknown kinds are rejected") {
    CHECK_THROWS_AS(parse_workspace(std::vector<std::string>{R"({"A": {"gadget": {}}})"}),
                    ParseError);
  }
}
