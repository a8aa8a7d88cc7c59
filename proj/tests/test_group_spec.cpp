#include <gtest/gtest.h>

#include <random>

#include "epg/epg.hpp"

namespace {

using namespace epg;

GroupSpec random_spec(std::mt19937& rng, int depth) {
  switch (rng() % (depth > 0 ? 6 : 5)) {
    case 0:
      return GroupSpec::cyclic(1 + rng() % 40);
    case 1:
      return GroupSpec::dihedral(1 + rng() % 20);
    case 2:
      return GroupSpec::dicyclic(2 + rng() % 10);
    case 3:
      return GroupSpec::metacyclic(1 + rng() % 20, 1 + rng() % 5, 1 + rng() % 9);
    case 4: {
      const unsigned degree = 2 + rng() % 5;
      std::vector<Permutation> gens;
      for (unsigned i = 0, count = 1 + rng() % 3; i < count; ++i) {
        Permutation p(degree);
        std::iota(p.begin(), p.end(), 0U);
        std::shuffle(p.begin(), p.end(), rng);
        gens.push_back(p);
      }
      return GroupSpec::perm(degree, gens);
    }
    default: {
      std::vector<GroupSpec> parts;
      for (unsigned i = 0, count = 2 + rng() % 2; i < count; ++i) parts.push_back(random_spec(rng, depth - 1));
      return GroupSpec::product(parts);
    }
  }
}

TEST(GroupSpecText, Grammar) {
  EXPECT_EQ(parse_group_spec("cyclic:6"), GroupSpec::cyclic(6));
  EXPECT_EQ(parse_group_spec("dihedral:4"), GroupSpec::dihedral(4));
  EXPECT_EQ(parse_group_spec("dicyclic:2"), GroupSpec::dicyclic(2));
  EXPECT_EQ(parse_group_spec("metacyclic:8:2:3"), GroupSpec::metacyclic(8, 2, 3));
  EXPECT_EQ(parse_group_spec("product:cyclic:2,cyclic:2"),
            GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
  EXPECT_EQ(parse_group_spec("perm:3:\"(0 1)\",\"(0 1 2)\""), GroupSpec::perm(3, {{1, 0, 2}, {1, 2, 0}}));
  EXPECT_EQ(parse_group_spec("perm:3:[1 0 2],[1 2 0]"), GroupSpec::perm(3, {{1, 0, 2}, {1, 2, 0}}));
  EXPECT_EQ(parse_group_spec("file:samples/z2.cayley"), GroupSpec::cayley_file("samples/z2.cayley"));
  EXPECT_EQ(parse_group_spec("product:[product:cyclic:2,cyclic:2],cyclic:3"),
            GroupSpec::product({GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}), GroupSpec::cyclic(3)}));
}

TEST(GroupSpecText, Errors) {
  for (const char* bad : {"", "cyclic", "cyclic:", "cyclic:x", "cyclic:-3", "torus:3", "metacyclic:8:2",
                          "perm:3:(0 5)", "perm:3:(0 1", "perm:3:(0 1 0)", "file:"})
    EXPECT_THROW(parse_group_spec(bad), ParseError) << bad;
}

TEST(GroupSpecText, RoundTripsRandomSpecs) {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto spec = random_spec(rng, 2);
    const auto text = to_string(spec);
    EXPECT_EQ(parse_group_spec(text), spec) << text;
    EXPECT_EQ(to_string(parse_group_spec(text)), text);
  }
}

TEST(GroupSpecText, RosterRoundTrips) {
  for (const auto& spec : roster_generate(64)) EXPECT_EQ(parse_group_spec(to_string(spec)), spec);
  for (const auto& spec : coprime_product_roster(216)) EXPECT_EQ(parse_group_spec(to_string(spec)), spec);
}

TEST(Permutations, CycleNotation) {
  EXPECT_EQ(parse_permutation("(0 1 2)", 4), (Permutation{1, 2, 0, 3}));
  EXPECT_EQ(parse_permutation("(0 1)(2 3)", 4), (Permutation{1, 0, 3, 2}));
  EXPECT_EQ(parse_permutation("()", 3), (Permutation{0, 1, 2}));
  EXPECT_EQ(format_permutation({1, 2, 0, 3}), "(0 1 2)");
  EXPECT_EQ(format_permutation({0, 1, 2}), "()");
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    Permutation p(1 + rng() % 8);
    std::iota(p.begin(), p.end(), 0U);
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(parse_permutation(format_permutation(p), static_cast<unsigned>(p.size())), p);
  }
}

TEST(GroupSpecText, DisplayNames) {
  EXPECT_EQ(display_name(GroupSpec::cyclic(6)), "Z6");
  EXPECT_EQ(display_name(GroupSpec::dihedral(4)), "Dih8");
  EXPECT_EQ(display_name(GroupSpec::dicyclic(2)), "Dic8");
  EXPECT_EQ(display_name(parse_group_spec("product:cyclic:2,cyclic:3")), "Z2 x Z3");
}

}  // namespace
