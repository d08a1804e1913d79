#include <doctest.h>

#include "qhent/entropy.hpp"
#include "qhent/json_io.hpp"

using namespace qhent;
using io::Json;

TEST_CASE("semantic validation reports every violation with its location") {
  Json bad = Json::parse(R"({"type":"iwasawa","p":2,"n":3,"m":2,"s":1})");
  auto rep = io::validate_group(bad);
  REQUIRE(!rep.ok());
  bool found = false;
  for (const auto& v : rep.violations)
    found |= v.location == "/s" && v.message.find("s >= 2") != std::string::npos;
  CHECK(found);

  auto rep2 = io::validate_group(Json::object());
  CHECK(!rep2.ok());

  auto rep3 = io::validate_group(Json::parse(
      R"({"type":"product","factors":[{"type":"cyclic"},{"type":"nope"}]})"));
  REQUIRE(rep3.violations.size() == 2);
  CHECK(rep3.violations[0].location == "/factors/0/n");
  CHECK(rep3.violations[1].location == "/factors/1/type");
}

TEST_CASE("group documents parse and build") {
  Json good = Json::parse(R"({"type":"iwasawa","p":3,"n":2,"m":1,"s":1})");
  REQUIRE(io::validate_group(good).ok());
  CHECK(io::parse_group(good)->order() == 27);

  Json ham = Json::parse(
      R"({"type":"hamiltonian","b":{"type":"cyclic","n":2},"d":{"type":"cyclic","n":3}})");
  CHECK(io::parse_group(ham)->order() == 48);
  Json ham_bad = Json::parse(
      R"({"type":"hamiltonian","b":{"type":"cyclic","n":2},"d":{"type":"cyclic","n":4}})");
  CHECK(!io::validate_group(ham_bad).ok());
}

TEST_CASE("descriptor documents round trip") {
  Json sum6 = Json::parse(
      R"({"type":"restricted_sum","component":{"type":"cyclic","n":6},"index_set":"N"})");
  auto d = io::parse_descriptor(sum6);
  CHECK(descriptor_equal(*io::parse_descriptor(io::descriptor_to_json(*d)), *d));
}

TEST_CASE("maps parse against their domain") {
  Json sum6 = Json::parse(
      R"({"type":"restricted_sum","component":{"type":"cyclic","n":6},"index_set":"N"})");
  auto g = io::parse_group(sum6);
  auto phi = io::parse_endo(Json::parse(R"({"type":"shift","k":1})"), g);
  auto bases = io::parse_bases_string("blocks:2", g);
  REQUIRE(bases.size() == 2);
  CHECK(bases[0].size() == 6);
  CHECK(bases[1].size() == 36);
  auto e = entropy_along(phi, bases[1]);
  CHECK(e.beta == 6);

  auto rep = io::validate_endo(
      Json::parse(R"({"type":"compose","outer":{"type":"shift"}})"));
  REQUIRE(rep.violations.size() == 2);
  CHECK(rep.violations[0].location == "/outer/k");
  CHECK(rep.violations[1].location == "/inner");
}

TEST_CASE("base families") {
  auto q8 = io::parse_group(Json::parse(R"({"type":"q8"})"));
  CHECK(io::parse_bases_string("cyclic", q8).size() == 5);

  Json mix = Json::parse(
      R"({"type":"product","factors":[{"type":"q8"},
          {"type":"restricted_sum","component":{"type":"cyclic","n":3},"index_set":"N"}]})");
  auto gm = io::parse_group(mix);
  auto mb = io::parse_bases_string("blocks:2", gm);
  REQUIRE(mb.size() == 2);
  CHECK(mb[0].size() == 24);
  CHECK(mb[1].size() == 72);

  // explicit generator lists
  auto z6 = io::parse_group(Json::parse(R"({"type":"cyclic","n":6})"));
  auto hex = z6->encode(scalar_value(2)).hex();
  auto eb = io::parse_bases(Json::parse("[[\"" + hex + "\"]]"), z6);
  REQUIRE(eb.size() == 1);
  CHECK(eb[0].size() == 3);

  CHECK_THROWS_AS(io::parse_bases_string("nonsense", z6), DecodeError);
}

TEST_CASE("witness documents") {
  Json sum6 = Json::parse(
      R"({"type":"restricted_sum","component":{"type":"cyclic","n":6},"index_set":"N"})");
  auto g = io::parse_group(sum6);
  auto w = io::parse_witness(
      Json::parse(R"({"type":"component_torsion","exponent":2})"), g);
  CHECK(w.kind() == SubgroupWitness::Kind::component_torsion);
  CHECK(w.torsion_exponent() == 2);
  CHECK(!io::validate_witness(Json::parse(R"({"type":"tails"})")).ok());
}
