#include "oracle.hpp"

#include "polyhex/error.hpp"
#include "polyhex/nanotube.hpp"

#include <gtest/gtest.h>

using namespace polyhex;

namespace {

// Expected partition written out directly from the count formulas.
std::map<std::pair<unsigned, unsigned>, std::uint64_t> table_partition(TubeKind kind,
                                                                       std::uint64_t m,
                                                                       std::uint64_t n) {
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> p;
  if (kind == TubeKind::Armchair)
    p[{2, 2}] = 2 * m;
  p[{2, 3}] = 4 * m;
  p[{3, 3}] = 3 * m * n - 2 * m;
  return p;
}

} // namespace

TEST(NanotubeSpec, Validation) {
  EXPECT_THROW(build_nanotube({TubeKind::Armchair, 1, 3}), InvalidSpec);
  EXPECT_THROW(build_nanotube({TubeKind::Zigzag, 3, 0}), InvalidSpec);
  try {
    validate({TubeKind::Armchair, 1, 3});
    FAIL();
  } catch (const InvalidSpec &e) {
    EXPECT_NE(std::string(e.what()).find("m must be ≥ 2"), std::string::npos);
  }
  try {
    validate({TubeKind::Zigzag, 2, 0});
    FAIL();
  } catch (const InvalidSpec &e) {
    EXPECT_NE(std::string(e.what()).find("n must be ≥ 1"), std::string::npos);
  }
}

TEST(NanotubeSpec, KindNames) {
  EXPECT_EQ(parse_tube_kind("armchair"), TubeKind::Armchair);
  EXPECT_EQ(parse_tube_kind("zigzag"), TubeKind::Zigzag);
  EXPECT_FALSE(parse_tube_kind("chiral"));
  EXPECT_EQ(kind_name(TubeKind::Zigzag), "zigzag");
}

TEST(BuildNanotube, ArmchairFiveByNine) {
  Graph g = build_nanotube({TubeKind::Armchair, 5, 9});
  EXPECT_EQ(g.vertex_count(), 110u);
  EXPECT_EQ(g.edge_count(), 155u);
}

TEST(BuildNanotube, ZigzagSevenByFive) {
  Graph g = build_nanotube({TubeKind::Zigzag, 7, 5});
  EXPECT_EQ(g.vertex_count(), 84u);
  EXPECT_EQ(g.edge_count(), 119u);
}

TEST(BuildNanotube, SmallestArmchair) {
  Graph g = build_nanotube({TubeKind::Armchair, 2, 1});
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(g.edge_count(), 14u);
  EXPECT_EQ(edge_partition(g), (EdgePartition{{{2, 2}, 4}, {{2, 3}, 8}, {{3, 3}, 2}}));
}

TEST(BuildNanotube, SmallestZigzag) {
  Graph g = build_nanotube({TubeKind::Zigzag, 2, 1});
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_EQ(edge_partition(g), (EdgePartition{{{2, 3}, 8}, {{3, 3}, 2}}));
}

TEST(BuildNanotube, ZigzagInteriorRowsHaveDegreeThree) {
  NanotubeSpec spec{TubeKind::Zigzag, 4, 6};
  Graph g = build_nanotube(spec);
  for (std::int64_t r = 1; r < spec.n; ++r)
    for (std::int64_t c = 0; c < 2 * spec.m; ++c)
      EXPECT_EQ(g.degree(vertex_id(spec, r, c)), 3u) << r << "," << c;
}

TEST(BuildNanotube, LatticePositionRoundTrip) {
  NanotubeSpec spec{TubeKind::Armchair, 3, 4};
  for (std::int64_t r = 0; r < row_count(spec); ++r)
    for (std::int64_t c = 0; c < row_width(spec); ++c) {
      LatticePosition p = lattice_position(spec, vertex_id(spec, r, c));
      EXPECT_EQ(p.row, r);
      EXPECT_EQ(p.column, c);
    }
}

// Every grid instance against the count formulas, the partition tables
// (recounted from raw edges), connectivity, degree range and girth.
TEST(BuildNanotube, GridMatchesTables) {
  for (TubeKind kind : {TubeKind::Armchair, TubeKind::Zigzag}) {
    for (std::int64_t m = 2; m <= 12; ++m) {
      for (std::int64_t n = 1; n <= 12; ++n) {
        NanotubeSpec spec{kind, m, n};
        SCOPED_TRACE(std::string(kind_name(kind)) + " " + std::to_string(m) + "," +
                     std::to_string(n));
        Graph g = build_nanotube(spec);
        auto raw = oracle::raw(g);
        const auto um = static_cast<std::uint64_t>(m), un = static_cast<std::uint64_t>(n);
        if (kind == TubeKind::Armchair) {
          EXPECT_EQ(g.vertex_count(), 2 * um * (un + 2));
          EXPECT_EQ(g.edge_count(), 3 * um * un + 4 * um);
        } else {
          EXPECT_EQ(g.vertex_count(), 2 * um * un + 2 * um);
          EXPECT_EQ(g.edge_count(), 3 * um * un + 2 * um);
        }
        EXPECT_EQ(oracle::partition(raw), table_partition(kind, um, un));
        EXPECT_EQ(edge_partition(g), nanotube_partition(spec));

        EXPECT_TRUE(oracle::connected(raw));
        EXPECT_TRUE(is_connected(g));
        EXPECT_EQ(g.min_degree(), 2u);
        EXPECT_EQ(g.max_degree(), 3u);

        auto d = oracle::degrees(raw);
        auto deg2 = std::count(d.begin(), d.end(), 2u);
        EXPECT_EQ(deg2, kind == TubeKind::Armchair ? 4 * m : 2 * m);

        if (m <= 8 && n <= 8) {
          std::size_t girth = oracle::girth(raw);
          if (kind == TubeKind::Zigzag)
            EXPECT_EQ(girth, static_cast<std::size_t>(std::min<std::int64_t>(6, 2 * m)));
          else if (m >= 3)
            EXPECT_EQ(girth, 6u);
        }
      }
    }
  }
}

TEST(NanotubePartition, LargeTubeWithoutBuilding) {
  EdgePartition p = nanotube_partition({TubeKind::Armchair, 1000, 1000});
  EXPECT_EQ(p.total(), 3'004'000u);
  EXPECT_EQ(p.count(3, 3), 2'998'000u);
  EXPECT_EQ(expected_edge_count({TubeKind::Armchair, 1000, 1000}), 3'004'000u);
  EXPECT_THROW(nanotube_partition({TubeKind::Zigzag, 1, 1}), InvalidSpec);
}
