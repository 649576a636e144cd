#include <gtest/gtest.h>

#include <random>

#include "lctr/json_io.hpp"
#include "lctr/partition.hpp"
#include "lctr/random.hpp"
#include "oracle.hpp"

using lctr::Partition;

namespace {

const Partition kFig{5, 3, 3, 2, 1, 1};

TEST(ParsePartition, ExponentNotation) {
  EXPECT_EQ(lctr::parse_partition("5,3^2,2,1^2"), kFig);
  EXPECT_EQ(lctr::parse_partition("(5, 3^2, 2, 1^2)"), kFig);
  EXPECT_EQ(lctr::parse_partition("  4 ^ 3 "), (Partition{4, 4, 4}));
}

TEST(ParsePartition, Empty) {
  EXPECT_EQ(lctr::parse_partition("()"), Partition{});
  EXPECT_EQ(lctr::parse_partition(""), Partition{});
  EXPECT_EQ(lctr::parse_partition("( )"), Partition{});
}

TEST(ParsePartition, RejectsIncreasing) {
  EXPECT_THROW(lctr::parse_partition("2,3"), lctr::DomainError);
  EXPECT_THROW(lctr::parse_partition("3,1^2,2"), lctr::DomainError);
}

TEST(ParsePartition, DomainErrors) {
  EXPECT_THROW(lctr::parse_partition("0"), lctr::DomainError);
  EXPECT_THROW(lctr::parse_partition("3,-1"), lctr::DomainError);
  EXPECT_THROW(lctr::parse_partition("3^0"), lctr::DomainError);
}

TEST(ParsePartition, SyntaxErrors) {
  for (const char* bad : {"a", "3,,2", "3,", "3^", "(3,2", "3.5", "3^2^2", "1 2"})
    EXPECT_THROW(lctr::parse_partition(bad), lctr::ParseError) << bad;
}

TEST(FormatPartition, Styles) {
  EXPECT_EQ(lctr::format_partition(kFig, lctr::PartitionStyle::Exponent), "5,3^2,2,1^2");
  EXPECT_EQ(lctr::format_partition(kFig, lctr::PartitionStyle::Expanded), "5,3,3,2,1,1");
  EXPECT_EQ(lctr::format_partition(Partition{}, lctr::PartitionStyle::Exponent), "()");
  EXPECT_EQ(lctr::format_partition(Partition{}, lctr::PartitionStyle::Expanded), "()");
  EXPECT_EQ(lctr::format_partition(Partition{4, 4, 4}, lctr::PartitionStyle::Expanded), "4,4,4");
}

TEST(PartitionInvariants, ConstructorValidates) {
  EXPECT_THROW((Partition{2, 3}), lctr::DomainError);
  EXPECT_THROW((Partition{2, 0}), lctr::DomainError);
  EXPECT_EQ(kFig.size(), 15u);
  EXPECT_EQ(kFig.length(), 6u);
}

TEST(Moves, TopRow) {
  EXPECT_EQ(lctr::remove_top_row(kFig), (Partition{3, 3, 2, 1, 1}));
  EXPECT_EQ(lctr::remove_top_row(Partition{7}), Partition{});
  EXPECT_EQ(lctr::remove_top_row(Partition{1, 1, 1}), (Partition{1, 1}));
  EXPECT_THROW(lctr::remove_top_row(Partition{}), lctr::DomainError);
}

TEST(Moves, LeftColumn) {
  EXPECT_EQ(lctr::remove_left_column(kFig), (Partition{4, 2, 2, 1}));
  EXPECT_EQ(lctr::remove_left_column(Partition{1, 1, 1}), Partition{});
  EXPECT_EQ(lctr::remove_left_column(Partition{2, 2}), (Partition{1, 1}));
  EXPECT_THROW(lctr::remove_left_column(Partition{}), lctr::DomainError);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(lctr::conjugate(Partition{}), Partition{});
  EXPECT_EQ(lctr::conjugate(Partition{3, 2, 1}), (Partition{3, 2, 1}));
  EXPECT_EQ(lctr::conjugate(kFig), (Partition{6, 4, 3, 1, 1}));
}

TEST(Subdiagram, Examples) {
  EXPECT_EQ(lctr::subdiagram(kFig, 1, 1), (Partition{2, 2, 1}));
  EXPECT_EQ(lctr::subdiagram(kFig, 0, 0), kFig);
  EXPECT_EQ(lctr::subdiagram(Partition{4, 4}, 9, 0), Partition{});
  EXPECT_EQ(lctr::subdiagram(Partition{4, 4}, 0, 9), Partition{});
}

TEST(PartitionJson, ArrayForm) {
  nlohmann::json j = kFig;
  EXPECT_EQ(j.dump(), "[5,3,3,2,1,1]");
  EXPECT_EQ(nlohmann::json::parse("[]").get<Partition>(), Partition{});
  EXPECT_THROW(nlohmann::json::parse("[1,2]").get<Partition>(), lctr::DomainError);
  EXPECT_THROW(nlohmann::json::parse("[0]").get<Partition>(), lctr::DomainError);
  EXPECT_THROW(nlohmann::json::parse("\"3,2\"").get<Partition>(), lctr::ParseError);
}

// Exhaustive over every partition of n <= 20.
TEST(PartitionProperties, MoveAlgebraExhaustive) {
  for (std::uint32_t n = 0; n <= 20; ++n) {
    for (const Partition& p : oracle::partitions_of(n)) {
      EXPECT_EQ(lctr::conjugate(lctr::conjugate(p)), p);
      EXPECT_EQ(lctr::conjugate(p).size(), p.size());
      if (p.empty()) continue;
      const Partition l = lctr::remove_left_column(p);
      const Partition t = lctr::remove_top_row(p);
      EXPECT_EQ(l, lctr::conjugate(lctr::remove_top_row(lctr::conjugate(p))));
      EXPECT_EQ(t, lctr::conjugate(lctr::remove_left_column(lctr::conjugate(p))));
      EXPECT_EQ(t.size(), p.size() - p[0]);
      EXPECT_EQ(l.size(), p.size() - p.length());
      // Cell-level reference model agrees with the operators.
      const auto cells = oracle::cells_of(p);
      EXPECT_EQ(l.parts(), oracle::shape_of(oracle::drop_left_column(cells)));
      EXPECT_EQ(t.parts(), oracle::shape_of(oracle::drop_top_row(cells)));
      if (!l.empty() && !t.empty()) {
        const Partition lt = lctr::remove_left_column(t);
        EXPECT_EQ(lt, lctr::remove_top_row(l));
        EXPECT_EQ(lt, lctr::subdiagram(p, 1, 1));
      }
    }
  }
}

TEST(PartitionProperties, SubdiagramIsComposedMoves) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Partition p = lctr::random_partition_up_to(60, rng);
    std::uniform_int_distribution<std::size_t> d(0, 8);
    const std::size_t i = d(rng), j = d(rng);
    // Random interleaving of i L-moves and j T-moves, saturating at ().
    std::vector<lctr::MoveKind> order(i, lctr::MoveKind::LeftColumn);
    order.insert(order.end(), j, lctr::MoveKind::TopRow);
    std::shuffle(order.begin(), order.end(), rng);
    Partition q = p;
    for (auto m : order)
      if (!q.empty()) q = lctr::apply_move(q, m);
    EXPECT_EQ(lctr::subdiagram(p, i, j), q) << p;
  }
}

TEST(PartitionProperties, ParseFormatRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Partition p = lctr::random_partition_up_to(1000, rng);
    for (auto style : {lctr::PartitionStyle::Expanded, lctr::PartitionStyle::Exponent})
      ASSERT_EQ(lctr::parse_partition(lctr::format_partition(p, style)), p);
  }
}

}  // namespace
