#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "s2det/certificate.hpp"
#include "s2det/errors.hpp"
#include "s2det/json_io.hpp"

using namespace s2det;
using nlohmann::json;

TEST_CASE("partition JSON round trip") {
  const EdgePartition e3 = build_E(3);
  const json j = partition_to_json(e3);
  CHECK(j.dump() == R"({"colors":[0,1,0,2,0,0,1,0,2,1,2,1,1,2,2],"d":3,"n":6})");
  CHECK(partition_from_json(j) == e3);
  CHECK_THROWS_AS(partition_from_json(json{{"d", 2}, {"n", 4}}), InputError);
  CHECK_THROWS_AS(partition_from_json(json{{"d", 2}, {"n", 4}, {"colors", {0, 1}}}), InputError);
  CHECK_THROWS_AS(partition_from_json(json{{"d", "2"}, {"n", 4}, {"colors", {0, 1, 0, 0, 1, 1}}}), InputError);
  CHECK_THROWS_AS(partition_from_json(json::array()), InputError);
}

TEST_CASE("anchor lists") {
  json j = json::array();
  json a = partition_to_json(build_E(2));
  a["sign"] = -1;
  j.push_back(a);
  const auto anchors = anchors_from_json(j);
  REQUIRE(anchors.size() == 1);
  CHECK(anchors[0].sign == -1);
  CHECK(anchors[0].partition == build_E(2));
  j[0]["sign"] = 0;
  CHECK_THROWS_AS(anchors_from_json(j), InputError);
  CHECK_THROWS_AS(anchors_from_json(json::object()), InputError);
}

TEST_CASE("vector inputs") {
  const json rational = {{"d", 2},
                         {"field", "rational"},
                         {"vectors", json::array({json::array({"1/2", "0"}), json::array({"-3", "2/4"}), json::array({"1", "1"}),
                                               json::array({"0", "0"}), json::array({"5", 7}), json::array({"1", "-1"})})}};
  const VectorInput in = vector_input_from_json(rational);
  CHECK(in.d == 2);
  CHECK(in.n == 4);
  CHECK(in.rational);
  CHECK(in.values.at(0, 0) == Rational(1, 2));
  CHECK(in.values.at(1, 1) == Rational(1, 2));
  CHECK(in.values.at(4, 1) == 7);

  json gfp = rational;
  gfp["field"] = "gfp";
  gfp["p"] = 7;
  CHECK(vector_input_from_json(gfp).modulus == 7);
  gfp["p"] = 6;
  CHECK_THROWS_AS(vector_input_from_json(gfp), InputError);
  gfp.erase("p");
  CHECK(vector_input_from_json(gfp).modulus == 101);

  json bad = rational;
  bad["field"] = "real";
  CHECK_THROWS_AS(vector_input_from_json(bad), InputError);
  bad = rational;
  bad["vectors"].erase(0);
  CHECK_THROWS_AS(vector_input_from_json(bad), InputError);
  bad = rational;
  bad["vectors"][0] = json::array({"1"});
  CHECK_THROWS_AS(vector_input_from_json(bad), InputError);
  bad = rational;
  bad["vectors"][0][0] = 0.5;
  CHECK_THROWS_AS(vector_input_from_json(bad), InputError);

  const VectorInput basis = vector_input_from_json(partition_to_json(build_E(2)));
  CHECK(as_partition(RationalField{}, basis.values) == build_E(2));
  const json back = vector_input_to_json(basis.values);
  CHECK(vector_input_from_json(back).values == basis.values);
}

TEST_CASE("matrix text for E_2") {
  CHECK(partition_matrix_text(build_E(2)) ==
        "e1 e2 e1\n"
        ".. e1 e2\n"
        ".. .. e2\n");
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "s2det_io_test.json";
  {
    std::ofstream out(path);
    out << partition_to_json(build_E(2)).dump();
  }
  CHECK(read_partition_file(path) == build_E(2));
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(read_partition_file(path), InputError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_json_file(path), InputError);
}

TEST_CASE("certificates serialize with sorted keys") {
  Certificate c;
  c.command = "rank";
  c.parameters = {{"p", 101}, {"d", 2}};
  c.numbers = {{"rank", 63}};
  CHECK(c.dump() ==
        std::string(R"({"command":"rank","numbers":{"rank":63},"outcome":"pass","parameters":{"d":2,"p":101},"version":")") +
            S2DET_VERSION + R"("})");
  c.fail("first statement");
  c.fail("second statement");
  c.wall_time = 0.5;
  const json j = c.to_json();
  CHECK(j["outcome"] == "fail");
  CHECK(j["violated"] == "first statement");
  CHECK(j["wall_time"] == 0.5);
}
