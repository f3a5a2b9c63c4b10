#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hf/exactmath.hpp>
#include <hf/gradedroot.hpp>
#include <hf/json_io.hpp>
#include <hf/seifert.hpp>

#include <string>

using namespace hf;

TEST_CASE("module round-trips through json") {
  HFPlusModule m = hf_plus(brieskorn(Int(2), Int(7), Int(17)));
  Json j = module_json("-Sigma(2,7,17)", m);
  std::string name;
  CHECK(module_from_json(j, &name) == m);
  CHECK(name == "-Sigma(2,7,17)");
  CHECK(module_from_text(json_dump(j)) == m);
  // dumping is stable
  CHECK(json_dump(j) == json_dump(module_json("-Sigma(2,7,17)", m)));
}

TEST_CASE("serialized key order is fixed") {
  HFPlusModule m = hf_plus(brieskorn(Int(2), Int(5), Int(13)));
  std::string text = json_dump(module_json("-Sigma(2,5,13)", m));
  size_t manifold = text.find("\"manifold\"");
  size_t d = text.find("\"d\"");
  size_t towers = text.find("\"towers\"");
  size_t odd = text.find("\"odd_rank\"");
  REQUIRE(manifold != std::string::npos);
  REQUIRE(d != std::string::npos);
  REQUIRE(towers != std::string::npos);
  REQUIRE(odd != std::string::npos);
  CHECK(manifold < d);
  CHECK(d < towers);
  CHECK(towers < odd);
  CHECK(text.back() == '\n');
  // towers themselves keep bottom/length/mult order
  size_t bottom = text.find("\"bottom\"");
  size_t length = text.find("\"length\"");
  size_t mult = text.find("\"mult\"");
  CHECK(bottom < length);
  CHECK(length < mult);
}

TEST_CASE("input towers are sorted and merged") {
  Json j;
  j["manifold"] = "x";
  j["d"] = 0;
  j["towers"] = Json::array({Json{{"bottom", 2}, {"length", 1}, {"mult", 1}},
                             Json{{"bottom", 0}, {"length", 1}, {"mult", 1}},
                             Json{{"bottom", 0}, {"length", 1}, {"mult", 2}},
                             Json{{"bottom", 0}, {"length", 3}, {"mult", 1}}});
  j["odd_rank"] = 0;
  HFPlusModule m = module_from_json(j);
  REQUIRE(m.towers.size() == 3);
  CHECK(m.towers[0] == Tower{0, 1, 3});
  CHECK(m.towers[1] == Tower{0, 3, 1});
  CHECK(m.towers[2] == Tower{2, 1, 1});
}

TEST_CASE("schema violations are rejected") {
  auto base = []() {
    Json j;
    j["manifold"] = "x";
    j["d"] = -2;
    j["towers"] = Json::array();
    j["odd_rank"] = 0;
    return j;
  };

  CHECK_THROWS_AS(module_from_text("not json"), MalformedInput);
  CHECK_THROWS_AS(module_from_text("[1,2]"), MalformedInput);
  CHECK_THROWS_AS(module_from_text("{\"d\": 0}"), MalformedInput);

  {
    Json j = base();
    j.erase("manifold");
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["manifold"] = 7;
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j.erase("d");
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["d"] = "deep";
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["extra"] = 1;
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["odd_rank"] = -1;
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["towers"] = 3;
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["towers"] = Json::array({Json{{"bottom", 0}, {"length", 0}, {"mult", 1}}});
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["towers"] = Json::array({Json{{"bottom", 0}, {"length", 1}, {"mult", -2}}});
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["towers"] =
        Json::array({Json{{"bottom", 0}, {"length", 1}, {"mult", 1}, {"junk", 0}}});
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
  {
    Json j = base();
    j["towers"] = Json::array({Json::array()});
    CHECK_THROWS_AS(module_from_json(j), MalformedInput);
  }
}
