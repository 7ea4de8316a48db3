#include "juror/io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace juror;
using namespace juror::testing;
using juror::io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("charge round trip on random algebras") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ground = static_cast<std::size_t>(uniform_int(rng, 1, 20));
    auto blocks = random_partition(rng, ground, 8);
    auto algebra = BooleanSubalgebra::from_partition(ground, blocks);
    Charge charge(algebra, random_masses(rng, algebra.atom_count(), trial % 3));
    auto text = io::charge_to_json(charge).dump();
    auto back = io::charge_from_json(io::parse_json(text));
    CHECK(back.charge == charge);
    CHECK_FALSE(back.catalog.has_value());
    // Serialization is deterministic.
    CHECK(io::charge_to_json(back.charge).dump() == text);
  }
}

TEST_CASE("world-space charge keeps its catalog") {
  TestimonyCatalog catalog({"alice", "bob"});
  WorldSpace space(catalog);
  auto prior = Charge::uniform_on_points(space.size());
  auto back = io::charge_from_json(io::charge_to_json(prior, catalog));
  REQUIRE(back.catalog.has_value());
  CHECK(*back.catalog == catalog);
  CHECK(back.charge == prior);
}

TEST_CASE("charge file validation") {
  auto parse = [](const std::string& text) { return io::charge_from_json(io::parse_json(text)); };
  CHECK(kind_of([&] { parse(R"({"ground_size":2,"atoms":{"0":"1/2","1":"1/2"},"extra":1})"); }) ==
        ErrorKind::kParseError);
  // Overlapping blocks.
  CHECK(kind_of([&] { parse(R"({"ground_size":2,"atoms":{"0,1":"1/2","1":"1/2"}})"); }) ==
        ErrorKind::kParseError);
  // Missing point.
  CHECK(kind_of([&] { parse(R"({"ground_size":3,"atoms":{"0":"1/2","1":"1/2"}})"); }) ==
        ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"({"ground_size":2,"atoms":{"0":"1/2","1":"1/3"}})"); }) ==
        ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"({"ground_size":2,"atoms":{"0":"-1/2","1":"3/2"}})"); }) ==
        ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"({"ground_size":2,"atoms":{"0":"half","1":"1/2"}})"); }) ==
        ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"({"ground_size":2,"atoms":{"0":"1/2","1":"1/2")"); }) == ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"([1,2])"); }) == ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"({"ground_size":2,"atoms":{"0":0.5,"1":"1/2"}})"); }) == ErrorKind::kParseError);
  // Catalog must match the ground size of its world space.
  CHECK(kind_of([&] { parse(R"({"ground_size":4,"catalog":["a","b"],"atoms":{"0,1,2,3":"1"}})"); }) ==
        ErrorKind::kParseError);
  auto ok = parse(R"({"ground_size":4,"catalog":["a"],"atoms":{"0,1,2,3":"1"}})");
  CHECK(ok.charge.measure(full_point_set(4)) == 1);
}

TEST_CASE("disposition round trip") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 0, 5));
    auto catalog = TestimonyCatalog::numbered(n);
    auto f = Disposition::from_predicate(catalog, [&](Transcript) { return uniform_int(rng, 0, 1) == 1; });
    auto back = io::disposition_from_json(io::parse_json(io::disposition_to_json(f).dump()));
    CHECK(back.catalog() == catalog);
    CHECK(back.convicting() == f.convicting());
  }
}

TEST_CASE("disposition file validation") {
  auto parse = [](const std::string& text) { return io::disposition_from_json(io::parse_json(text)); };
  CHECK(kind_of([&] { parse(R"({"catalog":["a"],"convicting":[["b"]],"default":"acquit"})"); }) ==
        ErrorKind::kForeignTestimony);
  CHECK(kind_of([&] { parse(R"({"catalog":["a"],"convicting":[["a"]],"default":"convict"})"); }) ==
        ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"({"catalog":["a","a"],"convicting":[]})"); }) == ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"({"convicting":[]})"); }) == ErrorKind::kParseError);
  CHECK(kind_of([&] { parse(R"({"catalog":["a"],"convicting":[["a"]],"mood":"grim"})"); }) ==
        ErrorKind::kParseError);
  auto labels = std::vector<std::string>();
  for (int i = 0; i < 13; ++i) labels.push_back("w" + std::to_string(i));
  Json big = {{"catalog", labels}, {"convicting", Json::array()}};
  CHECK(kind_of([&] { io::disposition_from_json(big); }) == ErrorKind::kCapExceeded);
  CHECK(io::disposition_from_json(big, 13).catalog().size() == 13);
}

TEST_CASE("certificate json carries exact posteriors") {
  auto f = Disposition::at_least(TestimonyCatalog::numbered(2), 1);
  auto cert = rationalize(f, Rational(2, 3));
  auto json = io::certificate_to_json(cert, f);
  CHECK(json["theta"] == "2/3");
  CHECK(json["posteriors"].size() == 4);
  CHECK(json["posteriors"][0]["posterior"] == "1/3");
  CHECK(json["posteriors"][3]["posterior"] == "2/3");
  auto prior = io::charge_from_json(json["prior"]);
  CHECK(verify_rationalization(f, Rational(2, 3), prior.charge).holds);
}
