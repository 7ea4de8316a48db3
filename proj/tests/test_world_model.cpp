#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace juror;
using namespace juror::testing;

TEST_CASE("full world space sizes and ordering") {
  auto empty = full_world_space(TestimonyCatalog{});
  REQUIRE(empty.size() == 2);
  CHECK(empty[0] == World{Transcript{}, Guilt::kGuilty});
  CHECK(empty[1] == World{Transcript{}, Guilt::kInnocent});

  CHECK(full_world_space(TestimonyCatalog::numbered(1)).size() == 4);

  // Enumerate transcript/guilt pairs independently for n = 3.
  std::set<std::pair<std::uint32_t, int>> expected;
  for (std::uint32_t m = 0; m < 8; ++m) {
    for (int g = 0; g < 2; ++g) expected.insert({m, g});
  }
  auto worlds = full_world_space(TestimonyCatalog::numbered(3));
  CHECK(worlds.size() == expected.size());
  CHECK(worlds.size() == 16);
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    CHECK(worlds[i].transcript.mask() == i / 2);
    CHECK((worlds[i].guilt == Guilt::kGuilty) == (i % 2 == 0));
  }
}

TEST_CASE("world space cap") {
  CHECK_THROWS_AS(WorldSpace(TestimonyCatalog::numbered(13)), Error);
  try {
    WorldSpace space(TestimonyCatalog::numbered(13));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapExceeded);
  }
  CHECK(WorldSpace(TestimonyCatalog::numbered(13, 14)).size() == (std::size_t{1} << 14));
  CHECK_THROWS_AS(TestimonyCatalog::numbered(2, TestimonyCatalog::kHardLimit + 1), Error);
  CHECK_THROWS_AS(TestimonyCatalog({"a", "a"}), Error);
}

TEST_CASE("event of a transcript") {
  TestimonyCatalog catalog({"t1"});
  WorldSpace space(catalog);
  CHECK(space.event_of_transcript(Transcript{}) == make_point_set(4, {0, 1}));
  std::vector<std::string> t1 = {"t1"};
  auto event = space.event_of_transcript(Transcript::from_labels(catalog, t1));
  CHECK(event == make_point_set(4, {2, 3}));
  CHECK(space.describe(2) == "{t1}|G");
  CHECK(space.describe(3) == "{t1}|I");

  std::vector<std::string> foreign = {"t9"};
  try {
    (void)Transcript::from_labels(catalog, foreign);
    FAIL("expected ForeignTestimony");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kForeignTestimony);
  }
  CHECK_THROWS_AS(space.event_of_transcript(Transcript::from_mask(0b10)), Error);
}

TEST_CASE("transcript events partition the world space and guilt is balanced") {
  for (std::size_t n = 0; n <= 5; ++n) {
    WorldSpace space(TestimonyCatalog::numbered(n));
    PointSet covered(space.size());
    for (Transcript t : space.transcripts()) {
      auto event = space.event_of_transcript(t);
      CHECK(event.count() == 2);
      CHECK_FALSE(covered.intersects(event));
      covered |= event;
    }
    CHECK(covered.all());

    auto guilt = space.guilt_event();
    CHECK(guilt.count() == (std::size_t{1} << n));
    CHECK((guilt | ~guilt).all());
    CHECK(guilt.count() == (~guilt).count());
  }
  CHECK(WorldSpace(TestimonyCatalog::numbered(1)).guilt_event() == make_point_set(4, {0, 2}));
  CHECK(WorldSpace(TestimonyCatalog{}).guilt_event() == make_point_set(2, {0}));
  CHECK(WorldSpace(TestimonyCatalog::numbered(4)).guilt_event().count() == 16);
}

TEST_CASE("generated algebra atoms") {
  std::vector<PointSet> none;
  auto trivial = atoms_of_generated_algebra(4, none);
  REQUIRE(trivial.atom_count() == 1);
  CHECK(trivial.atoms()[0].all());

  // Ground {1,2,3,4} mapped to indices 0..3.
  std::vector<PointSet> one = {make_point_set(4, {0, 1})};
  auto halves = atoms_of_generated_algebra(4, one);
  REQUIRE(halves.atom_count() == 2);
  CHECK(halves.atoms()[0] == make_point_set(4, {0, 1}));
  CHECK(halves.atoms()[1] == make_point_set(4, {2, 3}));

  std::vector<PointSet> two = {make_point_set(4, {0, 1}), make_point_set(4, {1, 2})};
  auto fine = atoms_of_generated_algebra(4, two);
  CHECK(fine.atoms() == sign_pattern_cells(4, two));
  CHECK(fine.atom_count() == 4);
}

TEST_CASE("generated atoms match sign-pattern cells") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t ground = static_cast<std::size_t>(uniform_int(rng, 1, 9));
    std::vector<PointSet> gens;
    for (int g = 0, k = static_cast<int>(uniform_int(rng, 0, 4)); g < k; ++g) gens.push_back(random_subset(rng, ground));
    auto algebra = BooleanSubalgebra::generated(ground, gens);
    CHECK(algebra.atoms() == sign_pattern_cells(ground, gens));
    for (const auto& g : gens) CHECK(algebra.is_expressible(g));
  }
}

TEST_CASE("algebra membership is closed under complement and union") {
  Rng rng(12);
  for (std::size_t ground = 1; ground <= 6; ++ground) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<PointSet> gens = {random_subset(rng, ground), random_subset(rng, ground)};
      auto algebra = BooleanSubalgebra::generated(ground, gens);
      auto members = algebra.members();
      for (const auto& a : members) {
        CHECK(algebra.is_expressible(~a));
        for (const auto& b : members) CHECK(algebra.is_expressible(a | b));
      }
      // Exhaustively, a subset is expressible iff it is one of the enumerated members.
      std::set<std::string> listed;
      for (const auto& m : members) listed.insert(format_points(m));
      for (std::size_t code = 0; code < (std::size_t{1} << ground); ++code) {
        PointSet s(ground, code);
        CHECK(algebra.is_expressible(s) == listed.contains(format_points(s)));
      }
    }
  }
}

TEST_CASE("logical independence examples") {
  auto algebra = BooleanSubalgebra::from_partition(4, {make_point_set(4, {0, 1}), make_point_set(4, {2, 3})});
  auto members = algebra.members();
  REQUIRE(members.size() == 4);

  auto b = make_point_set(4, {0, 2});
  CHECK(literal_independence(b, members));
  CHECK(is_logically_independent(b, algebra));

  PointSet empty(4);
  CHECK_FALSE(literal_independence(empty, members));
  CHECK_FALSE(is_logically_independent(empty, algebra));

  // The whole ground set meets every nontrivial member and its complement.
  auto ground = full_point_set(4);
  CHECK(literal_independence(ground, members));
  CHECK(is_logically_independent(ground, algebra));

  // With no nontrivial members the condition is vacuous.
  CHECK(is_logically_independent(empty, BooleanSubalgebra::trivial(4)));
}

TEST_CASE("atom-level independence agrees with the literal definition") {
  for (std::size_t ground = 1; ground <= 5; ++ground) {
    // Every partition reachable from two generators, against every candidate B.
    for (std::size_t g1 = 0; g1 < (std::size_t{1} << ground); ++g1) {
      for (std::size_t g2 = g1; g2 < (std::size_t{1} << ground); g2 += 3) {
        std::vector<PointSet> gens = {PointSet(ground, g1), PointSet(ground, g2)};
        auto algebra = BooleanSubalgebra::generated(ground, gens);
        auto members = algebra.members();
        for (std::size_t code = 0; code < (std::size_t{1} << ground); ++code) {
          PointSet b(ground, code);
          CHECK(is_logically_independent(b, algebra) == literal_independence(b, members));
        }
      }
    }
  }
}

TEST_CASE("expressibility") {
  auto algebra = BooleanSubalgebra::from_partition(4, {make_point_set(4, {0, 1}), make_point_set(4, {2, 3})});
  CHECK(is_expressible(make_point_set(4, {0, 1}), algebra));
  CHECK_FALSE(is_expressible(make_point_set(4, {0}), algebra));
  CHECK(is_expressible(PointSet(4), algebra));
  CHECK(is_expressible(full_point_set(4), algebra));
}

TEST_CASE("from_partition validation") {
  CHECK_THROWS_AS(BooleanSubalgebra::from_partition(3, {make_point_set(3, {0, 1})}), Error);
  CHECK_THROWS_AS(BooleanSubalgebra::from_partition(3, {make_point_set(3, {0, 1}), make_point_set(3, {1, 2})}), Error);
  CHECK_THROWS_AS(BooleanSubalgebra::from_partition(2, {make_point_set(2, {0, 1}), PointSet(2)}), Error);
}

TEST_CASE("point set text form") {
  CHECK(format_points(make_point_set(8, {7, 0, 3})) == "0,3,7");
  CHECK(parse_points(8, "0, 3,7") == make_point_set(8, {0, 3, 7}));
  CHECK(parse_points(8, "") == PointSet(8));
  CHECK_THROWS_AS(parse_points(8, "8"), Error);
  CHECK_THROWS_AS(parse_points(8, "1,,2"), Error);
}
