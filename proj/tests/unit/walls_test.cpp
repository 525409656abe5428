#include "coxfsa/walls.hpp"

#include <gtest/gtest.h>

#include <set>
#include <unordered_set>

#include "coxfsa/errors.hpp"
#include "coxfsa/tits.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace coxfsa {
namespace {

using coxfsa::testing::load;
using coxfsa::testing::SignPatternOracle;

// Walls dual to some edge of the ball.
std::vector<Wall> walls_near(const CoxeterSystem& sys, std::size_t radius) {
  std::vector<Wall> out;
  std::unordered_set<Wall> seen;
  for (const auto& h : ball(sys, radius)) {
    for (Generator s = 0; s < sys.rank(); ++s) {
      Wall w = conjugate_wall(h, wall_of_generator(sys, s));
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  return out;
}

TEST(WallTest, ConjugationExamples) {
  auto sys = load("triangle244");
  const Wall ws = wall_of_generator(*sys, 0), wt = wall_of_generator(*sys, 1);
  EXPECT_EQ(conjugate_wall(sys->identity(), wt), wt);
  EXPECT_EQ(conjugate_wall(sys->generator(0), ws), ws);
  // m_st = 2, so s fixes alpha_t.
  EXPECT_EQ(conjugate_wall(sys->generator(0), wt).root(), sys->simple_root(1));
  // m_sr = 4: s(alpha_r) = alpha_r + sqrt2 alpha_s.
  const Wall c = conjugate_wall(sys->generator(0), wall_of_generator(*sys, 2));
  EXPECT_EQ(c.root()[0], sys->field().theta());
  EXPECT_EQ(c.root()[2], sys->field().one());
}

TEST(WallTest, ReflectionIsConjugateOfGenerator) {
  auto sys = load("triangle244");
  for (const auto& g : ball(*sys, 4)) {
    for (Generator s = 0; s < 3; ++s) {
      const Wall w = conjugate_wall(g, wall_of_generator(*sys, s));
      const Element r = w.reflection();
      EXPECT_EQ(r, g * sys->generator(s) * g.inverse());
      EXPECT_TRUE((r * r).is_identity());
      EXPECT_FALSE(r.is_identity());
      // r negates its root.
      Vector neg = w.root();
      for (auto& x : neg) x = -x;
      EXPECT_EQ(r.apply(w.root()), neg);
    }
  }
}

TEST(WallTest, FromRootValidates) {
  auto sys = load("triangle244");
  Vector mixed{sys->field().one(), -sys->field().one(), Scalar()};
  EXPECT_THROW(Wall::from_root(*sys, mixed), PreconditionError);
  Vector longer{sys->field().from_rational(2), Scalar(), Scalar()};
  EXPECT_THROW(Wall::from_root(*sys, longer), PreconditionError);
  Vector neg{-sys->field().one(), Scalar(), Scalar()};
  EXPECT_EQ(Wall::from_root(*sys, neg), wall_of_generator(*sys, 0));
}

TEST(SideTest, Examples) {
  auto sys = load("triangle244");
  const Wall ws = wall_of_generator(*sys, 0);
  EXPECT_EQ(side(ws, sys->identity()), Side::kNear);
  EXPECT_EQ(side(ws, sys->generator(0)), Side::kFar);
  EXPECT_EQ(side(ws, element_of(*sys, sys->parse_word("ts"))), Side::kFar);
  // With m_sr = 4 the s-wall separates sr from id but not rs.
  EXPECT_EQ(side(ws, element_of(*sys, sys->parse_word("sr"))), Side::kFar);
  EXPECT_EQ(side(ws, element_of(*sys, sys->parse_word("rs"))), Side::kNear);
}

TEST(SideTest, FarSideMatchesRewritingLengths) {
  // The reflection r is on the far side from g iff l(r g) < l(g).
  for (const auto& name : {"triangle244", "triangle333", "a3tilde"}) {
    auto sys = load(name);
    TitsOracle oracle(sys->matrix(), 16);
    const auto chambers = ball(*sys, 4);
    for (const auto& w : walls_near(*sys, 2)) {
      const Word r = w.reflection().normal_form();
      for (const auto& g : chambers) {
        const bool far = oracle.length(r + g.normal_form()) < g.length();
        EXPECT_EQ(side(w, g) == Side::kFar, far) << name;
      }
    }
  }
}

TEST(InversionWallsTest, Examples) {
  auto sys = load("triangle244");
  EXPECT_TRUE(inversion_walls(sys->identity()).empty());
  EXPECT_EQ(inversion_walls(sys->generator(0)),
            std::vector<Wall>{wall_of_generator(*sys, 0)});
  const auto walls = inversion_walls(element_of(*sys, sys->parse_word("strst")));
  EXPECT_EQ(walls.size(), 5u);
  EXPECT_EQ(std::set<Wall>(walls.begin(), walls.end()).size(), 5u);
}

TEST(InversionWallsTest, ExactlyTheFarWalls) {
  for (const auto& name : {"triangle244", "triangle333", "inf_dihedral", "a3tilde"}) {
    auto sys = load(name);
    const auto candidates = walls_near(*sys, 7);
    for (const auto& g : ball(*sys, name == std::string("a3tilde") ? 5 : 7)) {
      const auto inv = inversion_walls(g);
      ASSERT_EQ(inv.size(), g.length());
      const std::unordered_set<Wall> inv_set(inv.begin(), inv.end());
      EXPECT_EQ(inv_set.size(), inv.size());
      for (const auto& w : candidates) {
        EXPECT_EQ(side(w, g) == Side::kFar, inv_set.count(w) == 1);
      }
    }
  }
}

TEST(CrossingTest, Examples) {
  auto triangle244 = load("triangle244");
  EXPECT_TRUE(walls_cross(wall_of_generator(*triangle244, 0), wall_of_generator(*triangle244, 1)));
  EXPECT_TRUE(walls_cross(wall_of_generator(*triangle244, 0), wall_of_generator(*triangle244, 2)));
  auto dih = load("inf_dihedral");
  EXPECT_FALSE(walls_cross(wall_of_generator(*dih, 0), wall_of_generator(*dih, 1)));
  EXPECT_THROW(walls_cross(wall_of_generator(*dih, 0), wall_of_generator(*dih, 0)),
               PreconditionError);
}

TEST(CrossingTest, AgreesWithSignPatternOracle) {
  struct Case {
    const char* name;
    std::size_t radius, oracle_radius;
  };
  for (const Case& c : {Case{"triangle244", 6, 14}, Case{"triangle333", 6, 14},
                        Case{"inf_dihedral", 6, 14}, Case{"a3tilde", 4, 10}}) {
    auto sys = load(c.name);
    SignPatternOracle oracle(*sys, c.oracle_radius);
    std::set<std::pair<Wall, Wall>> done;
    std::size_t crossing = 0;
    for (const auto& g : ball(*sys, c.radius)) {
      const auto inv = inversion_walls(g);
      for (std::size_t i = 0; i < inv.size(); ++i) {
        for (std::size_t j = i + 1; j < inv.size(); ++j) {
          auto key = inv[i] < inv[j] ? std::make_pair(inv[i], inv[j])
                                     : std::make_pair(inv[j], inv[i]);
          if (!done.insert(key).second) continue;
          const bool x = walls_cross(inv[i], inv[j]);
          crossing += x;
          EXPECT_EQ(x, oracle.cross(inv[i], inv[j])) << c.name;
        }
      }
    }
    if (std::string(c.name) != "inf_dihedral") EXPECT_GT(crossing, 0u);
  }
}

TEST(CrossingTest, ConjugationPreservesCrossing) {
  auto sys = load("triangle333");
  const auto walls = walls_near(*sys, 2);
  const Element g = element_of(*sys, sys->parse_word("abcab"));
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      EXPECT_EQ(walls_cross(walls[i], walls[j]),
                walls_cross(conjugate_wall(g, walls[i]), conjugate_wall(g, walls[j])));
    }
  }
}

TEST(AdjacentChamberTest, Examples) {
  auto sys = load("triangle333");
  EXPECT_TRUE(adjacent_chamber(wall_of_generator(*sys, 1)).is_identity());
  // The wall of aba = bab: reached from a or from b; the least generator wins.
  const Wall w = conjugate_wall(sys->generator(1), wall_of_generator(*sys, 0));
  EXPECT_EQ(w.reflection().normal_form(), sys->parse_word("aba"));
  const DualEdge e = dual_edge(w);
  EXPECT_EQ(e.chamber, sys->generator(0));
  EXPECT_EQ(e.generator, 1u);
}

TEST(AdjacentChamberTest, DualEdgeStraddlesTheWall) {
  for (const auto& name : {"triangle244", "triangle333", "a3tilde", "inf_dihedral"}) {
    auto sys = load(name);
    for (const auto& w : walls_near(*sys, name == std::string("a3tilde") ? 4 : 6)) {
      const DualEdge e = dual_edge(w);
      const Element other = e.chamber.times(e.generator);
      EXPECT_EQ(e.chamber.inverse() * w.reflection() * e.chamber,
                sys->generator(e.generator));
      EXPECT_NE(side(w, e.chamber), side(w, other));
      EXPECT_EQ(conjugate_wall(e.chamber, wall_of_generator(*sys, e.generator)), w);
    }
  }
}

TEST(WallSetTest, Examples) {
  auto sys = load("triangle244");
  EXPECT_TRUE(wall_set(sys->identity()).empty());
  EXPECT_EQ(wall_set(sys->generator(0)), std::vector<Wall>{wall_of_generator(*sys, 0)});
  EXPECT_EQ(wall_set(element_of(*sys, sys->parse_word("strst"))).size(), 3u);
}

TEST(WallSetTest, InfiniteDihedralHasOneWall) {
  auto sys = load("inf_dihedral");
  for (const auto& g : ball(*sys, 10)) {
    if (g.is_identity()) continue;
    const auto ws = wall_set(g);
    ASSERT_EQ(ws.size(), 1u);
    // The last wall crossed.
    EXPECT_EQ(ws[0], inversion_walls(g).back());
  }
}

// W(g) computed with every nearby wall as a potential separator and the sign
// pattern oracle for crossing.
std::set<Wall> brute_wall_set(const Element& g, const std::vector<Wall>& candidates,
                              SignPatternOracle& oracle) {
  std::set<Wall> out;
  for (const auto& b : inversion_walls(g)) {
    const auto& chambers = oracle.chambers();
    // Chambers adjacent to b inside the oracle ball.
    std::vector<std::size_t> adjacent;
    const auto& sb = oracle.sides(b);
    for (std::size_t i = 0; i < chambers.size(); ++i) {
      for (Generator s = 0; s < g.system().rank(); ++s) {
        if (conjugate_wall(chambers[i], wall_of_generator(g.system(), s)) == b) {
          adjacent.push_back(i);
          break;
        }
      }
    }
    (void)sb;
    bool shadowed = false;
    for (const auto& a : candidates) {
      if (a == b || oracle.cross(a, b)) continue;
      const char gside = side(a, g) == Side::kFar;
      const auto& sa = oracle.sides(a);
      const bool all_opposite = std::all_of(adjacent.begin(), adjacent.end(),
                                            [&](std::size_t i) { return sa[i] != gside; });
      if (!adjacent.empty() && all_opposite) {
        shadowed = true;
        break;
      }
    }
    if (!shadowed) out.insert(b);
  }
  return out;
}

TEST(WallSetTest, MatchesBruteForceOverAllNearbyWalls) {
  for (const auto& name : {"triangle244", "triangle333"}) {
    auto sys = load(name);
    SignPatternOracle oracle(*sys, 10);
    const auto candidates = walls_near(*sys, 6);
    for (const auto& g : ball(*sys, 5)) {
      const auto ws = wall_set(g);
      EXPECT_EQ(std::set<Wall>(ws.begin(), ws.end()), brute_wall_set(g, candidates, oracle))
          << name << " " << sys->format_word(g.normal_form());
    }
  }
}

TEST(ResidueWallsTest, Examples) {
  auto sys = load("triangle244");
  EXPECT_EQ(residue_walls(*sys, sys->identity(), GeneratorSet{0}),
            std::vector<Wall>{wall_of_generator(*sys, 0)});
  EXPECT_EQ(residue_walls(*sys, sys->identity(), GeneratorSet{0, 1}).size(), 2u);
  EXPECT_EQ(residue_walls(*sys, sys->identity(), GeneratorSet{0, 2}).size(), 4u);
  EXPECT_THROW(residue_walls(*sys, sys->identity(), GeneratorSet{0, 1, 2}),
               PreconditionError);
}

TEST(ResidueWallsTest, WallsSeparatingResidueMembers) {
  auto sys = load("a3tilde");
  const GeneratorSet t{0, 1, 2};
  const auto par = coxfsa::testing::enumerate_parabolic(*sys, t, 100);
  ASSERT_TRUE(par.has_value());
  for (const auto& g : ball(*sys, 3)) {
    std::set<Wall> expect;
    for (const auto& u : *par) {
      for (Generator s : t.members()) {
        expect.insert(conjugate_wall(g * u, wall_of_generator(*sys, s)));
      }
    }
    const auto got = residue_walls(*sys, g, t);
    EXPECT_EQ(std::set<Wall>(got.begin(), got.end()), expect);
    EXPECT_EQ(got.size(), 6u);
  }
}

}  // namespace
}  // namespace coxfsa
