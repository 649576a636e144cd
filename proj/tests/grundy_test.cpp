#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lctr/grundy.hpp"
#include "lctr/random.hpp"
#include "oracle.hpp"

using lctr::GrundyValue;
using lctr::MoveKind;
using lctr::Partition;

namespace {

const Partition kFig{5, 3, 3, 2, 1, 1};
const Partition kStair6 = Partition::staircase(6);

GrundyValue G(unsigned v) { return GrundyValue(v); }

TEST(Mex, Examples) {
  EXPECT_EQ(lctr::mex({0, 1, 3}), 2u);
  EXPECT_EQ(lctr::mex(std::set<unsigned>{}), 0u);
  EXPECT_EQ(lctr::mex({1, 2}), 0u);
  EXPECT_EQ(lctr::mex({0, 0}), 1u);
  EXPECT_EQ(lctr::mex({2, 0, 1}), 3u);
  EXPECT_EQ(lctr::mex(std::set<unsigned>{0, 1, 3}), 2u);
}

// Labels of the small digraph used to illustrate mex: two terminals (0), two
// positions whose only follower is terminal (1), two with followers {0, 1}
// (2), and a root with followers {1, 2} (0).
TEST(Mex, DigraphFixture) {
  const unsigned d = 0, g = 0;
  const unsigned e = lctr::mex({d}), f = lctr::mex({g});
  const unsigned b = lctr::mex({d, e}), c = lctr::mex({g, f});
  const unsigned a = lctr::mex({b, c});
  EXPECT_EQ(e, 1u);
  EXPECT_EQ(f, 1u);
  EXPECT_EQ(b, 2u);
  EXPECT_EQ(c, 2u);
  EXPECT_EQ(a, 0u);
}

TEST(SgNaive, Examples) {
  EXPECT_EQ(lctr::sg_naive(Partition{}), G(0));
  EXPECT_EQ(lctr::sg_naive(Partition{1}), G(1));
  EXPECT_EQ(lctr::sg_naive(Partition{2}), G(2));
  EXPECT_EQ(lctr::sg_naive(kFig), G(1));
}

TEST(SgNaive, SizeGuard) {
  EXPECT_NO_THROW(lctr::sg_naive(Partition::rectangle(5, 6)));
  EXPECT_THROW(lctr::sg_naive(Partition{31}), lctr::DomainError);
}

TEST(SgMemo, Examples) {
  EXPECT_EQ(lctr::sg_memo(kFig), G(1));
  EXPECT_EQ(lctr::sg_memo(kStair6), G(0));
  EXPECT_EQ(lctr::sg_memo(Partition{12, 12, 10, 10, 6, 6, 6, 6}), G(0));
  EXPECT_EQ(lctr::sg_memo(Partition{}), G(0));
}

TEST(SgMemo, TableSeededAndShared) {
  lctr::MemoTable table;
  EXPECT_EQ(table.size(), 1u);
  EXPECT_TRUE(table.contains(Partition{}));
  EXPECT_EQ(lctr::sg_memo(kFig, table), G(1));
  // Every position reachable from kFig, plus kFig and (), is now cached.
  EXPECT_EQ(table.size(), lctr::reachable_positions(kFig).size() + 1);
  const auto before = table.insertions();
  EXPECT_EQ(lctr::sg_memo(Partition{4, 2, 2, 1}, table), G(2));
  EXPECT_EQ(table.insertions(), before);
}

TEST(SgMemo, LongRowDoesNotRecurse) {
  EXPECT_EQ(lctr::sg_memo(Partition{200000}), G(2));
  EXPECT_EQ(lctr::sg_memo(Partition::rectangle(1, 200001)), G(1));
}

TEST(SgGrid, Examples) {
  EXPECT_EQ(lctr::sg_grid(kFig), G(1));
  EXPECT_EQ(lctr::sg_grid(Partition{9, 1, 1, 1}), G(0));
  EXPECT_EQ(lctr::sg_grid(Partition{5, 5, 5, 5}), G(1));
  EXPECT_EQ(lctr::sg_grid(Partition{}), G(0));
}

TEST(SgGrid, TableCellsAreSubdiagramValues) {
  const lctr::GridTable table = lctr::grid_table(kFig);
  EXPECT_EQ(table.cell_count(), kFig.size());
  oracle::Solver solver;
  for (std::size_t j = 0; j < kFig.length(); ++j)
    for (std::size_t i = 0; i < kFig[j]; ++i)
      EXPECT_EQ(table.at(j, i).value(), solver.sg(lctr::subdiagram(kFig, i, j))) << j << "," << i;
  EXPECT_EQ(table.at(0, 0), lctr::sg_grid(kFig));
}

TEST(Outcome, Examples) {
  EXPECT_EQ(lctr::outcome(Partition{}), lctr::Outcome::PreviousPlayerWins);
  EXPECT_EQ(lctr::outcome(Partition{7}), lctr::Outcome::NextPlayerWins);
  EXPECT_EQ(lctr::outcome(Partition{6, 1, 1, 1, 1}), lctr::Outcome::PreviousPlayerWins);
}

TEST(BestMove, Examples) {
  auto m = lctr::best_move(kFig);
  EXPECT_EQ(m.kind, MoveKind::TopRow);
  EXPECT_EQ(m.result, (Partition{3, 3, 2, 1, 1}));

  m = lctr::best_move(Partition{2, 2, 1});
  EXPECT_EQ(m.kind, MoveKind::TopRow);
  EXPECT_EQ(m.result, (Partition{2, 1}));

  m = lctr::best_move(Partition{2, 1});  // P-position: fallback
  EXPECT_EQ(m.kind, MoveKind::TopRow);
  EXPECT_EQ(m.result, (Partition{1}));

  EXPECT_THROW(lctr::best_move(Partition{}), lctr::DomainError);
}

TEST(BestMove, PrefersLeftOnlyWhenTopLoses) {
  // (3,3): T -> (3) has value 1, L -> (2,2) has value 0.
  const auto m = lctr::best_move(Partition{3, 3});
  EXPECT_EQ(m.kind, MoveKind::LeftColumn);
  EXPECT_EQ(m.result, (Partition{2, 2}));
}

TEST(FollowerValues, Examples) {
  auto f = lctr::follower_values(kFig);
  EXPECT_EQ(f.left.position, (Partition{4, 2, 2, 1}));
  EXPECT_EQ(f.left.value, G(2));
  EXPECT_EQ(f.top.position, (Partition{3, 3, 2, 1, 1}));
  EXPECT_EQ(f.top.value, G(0));
  EXPECT_EQ(&f.at(MoveKind::TopRow), &f.top);

  f = lctr::follower_values(Partition{1});
  EXPECT_EQ(f.left.position, Partition{});
  EXPECT_EQ(f.top.position, Partition{});
  EXPECT_EQ(f.left.value, G(0));
  EXPECT_EQ(f.top.value, G(0));

  f = lctr::follower_values(Partition{4, 4});
  EXPECT_EQ(f.left.position, (Partition{3, 3}));
  EXPECT_EQ(f.left.value, G(2));
  EXPECT_EQ(f.top.position, (Partition{4}));
  EXPECT_EQ(f.top.value, G(2));

  EXPECT_THROW(lctr::follower_values(Partition{}), lctr::DomainError);
}

TEST(Reachable, WorkedExample) {
  const std::set<Partition> expected{
      {}, {1}, {1, 1}, {2}, {2, 1}, {2, 1, 1}, {2, 2, 1},
      {3, 1, 1}, {3, 2, 1, 1}, {3, 3, 2, 1, 1}, {4, 2, 2, 1}};
  EXPECT_EQ(lctr::reachable_positions(kFig), expected);
}

TEST(Reachable, StaircaseAndRectangle) {
  const std::set<Partition> stairs{{}, {1}, {2, 1}, {3, 2, 1}, {4, 3, 2, 1}, {5, 4, 3, 2, 1}};
  EXPECT_EQ(lctr::reachable_positions(kStair6), stairs);
  const std::set<Partition> square{{1, 1}, {2}, {1}, {}};
  EXPECT_EQ(lctr::reachable_positions(Partition{2, 2}), square);
  EXPECT_TRUE(lctr::reachable_positions(Partition{}).empty());
}

TEST(CountPlays, Examples) {
  EXPECT_EQ(lctr::count_plays(kFig), 29);
  EXPECT_EQ(lctr::count_plays(kStair6), 64);
  EXPECT_EQ(lctr::count_plays(Partition{1}), 2);
  EXPECT_EQ(lctr::count_plays(Partition{}), 1);
}

TEST(CountPlays, LargeValuesDoNotOverflow) {
  // s_n has 2^n plays.
  lctr::BigCount expected = 1;
  expected <<= 200;
  EXPECT_EQ(lctr::count_plays(Partition::staircase(200)), expected);
}

// --- properties --------------------------------------------------------------

TEST(EngineAgreement, ExhaustiveUpTo14) {
  oracle::Solver solver;
  std::size_t checked = 0;
  for (std::uint32_t n = 0; n <= 14; ++n) {
    for (const Partition& p : oracle::partitions_of(n)) {
      const unsigned expected = solver.sg(p);
      ASSERT_EQ(lctr::sg_naive(p).value(), expected) << p;
      ASSERT_EQ(lctr::sg_memo(p).value(), expected) << p;
      ASSERT_EQ(lctr::sg_grid(p).value(), expected) << p;
      ++checked;
    }
  }
  EXPECT_EQ(oracle::partitions_of(14).size(), 135u);
  EXPECT_GT(checked, 135u);
}

TEST(EngineAgreement, RandomUpTo30) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const Partition p = lctr::random_partition_up_to(30, rng);
    const auto g = lctr::sg_grid(p);
    ASSERT_EQ(lctr::sg_naive(p), g) << p;
    ASSERT_EQ(lctr::sg_memo(p), g) << p;
  }
}

TEST(GrundyProperties, BoundAndConjugateInvarianceUpTo20) {
  for (std::uint32_t n = 0; n <= 20; ++n)
    for (const Partition& p : oracle::partitions_of(n)) {
      const auto g = lctr::sg_grid(p);
      ASSERT_LE(g.value(), 2u) << p;
      ASSERT_EQ(lctr::sg_grid(lctr::conjugate(p)), g) << p;
    }
}

TEST(GrundyProperties, RecurrenceAndOutcome) {
  for (std::uint32_t n = 1; n <= 16; ++n)
    for (const Partition& p : oracle::partitions_of(n)) {
      const auto f = lctr::follower_values(p);
      const auto g = lctr::sg_grid(p);
      ASSERT_EQ(g.value(), lctr::mex({f.left.value.value(), f.top.value.value()})) << p;
      ASSERT_EQ(lctr::outcome(p) == lctr::Outcome::PreviousPlayerWins, g.is_zero()) << p;
    }
}

TEST(GrundyProperties, BestMoveWinsFromNPositions) {
  for (std::uint32_t n = 1; n <= 16; ++n)
    for (const Partition& p : oracle::partitions_of(n)) {
      const auto m = lctr::best_move(p);
      EXPECT_EQ(m.result, lctr::apply_move(p, m.kind));
      if (!lctr::sg_grid(p).is_zero()) {
        ASSERT_TRUE(lctr::sg_grid(m.result).is_zero()) << p;
      } else {
        ASSERT_EQ(m.kind, MoveKind::TopRow) << p;
      }
    }
}

TEST(GrundyProperties, EngineWinsRandomPlayouts) {
  std::mt19937_64 rng(99);
  int played = 0;
  while (played < 1000) {
    Partition p = lctr::random_partition_up_to(20, rng);
    if (p.empty() || lctr::sg_grid(p).is_zero()) continue;
    ++played;
    bool engine_to_move = true;
    bool engine_moved_last = false;
    while (!p.empty()) {
      if (engine_to_move) {
        p = lctr::best_move(p).result;
      } else {
        p = lctr::apply_move(p, rng() % 2 ? MoveKind::TopRow : MoveKind::LeftColumn);
      }
      engine_moved_last = engine_to_move;
      engine_to_move = !engine_to_move;
    }
    ASSERT_TRUE(engine_moved_last);
  }
}

TEST(Reachability, MatchesOracleAndBoundUpTo18) {
  for (std::uint32_t n = 0; n <= 18; ++n)
    for (const Partition& p : oracle::partitions_of(n)) {
      const auto got = lctr::reachable_positions(p);
      std::set<std::vector<std::uint32_t>> shapes;
      for (const auto& q : got) shapes.insert(q.parts());
      ASSERT_EQ(shapes, oracle::reachable(p)) << p;
      ASSERT_LE(got.size(), p.size()) << p;
      const bool rectangle = !p.empty() && p[0] == p[p.length() - 1];
      ASSERT_EQ(got.size() == p.size(), rectangle || p.empty()) << p;
    }
}

TEST(Reachability, MemoInsertsEachPositionOnce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Partition p = lctr::random_partition_up_to(200, rng);
    lctr::MemoTable table;
    lctr::sg_memo(p, table);
    ASSERT_EQ(table.insertions(), lctr::reachable_positions(p).size() + 1) << p;
  }
}

TEST(CountPlays, MatchesEnumerationAndBounds) {
  for (std::uint32_t n = 1; n <= 12; ++n)
    for (const Partition& p : oracle::partitions_of(n)) {
      const auto plays = lctr::count_plays(p);
      ASSERT_EQ(plays, oracle::plays(oracle::cells_of(p))) << p;
      ASSERT_GE(plays, lctr::reachable_positions(p).size()) << p;
    }
  for (lctr::part_t n = 1; n <= 30; ++n) {
    lctr::BigCount expected = 1;
    expected <<= n;
    EXPECT_EQ(lctr::count_plays(Partition::staircase(n)), expected);
  }
}

}  // namespace
