#include <gtest/gtest.h>

#include <algorithm>

#include "ostab/error.hpp"
#include "ostab/partition.hpp"

using namespace ostab;

namespace {

// Ferrers diagram as a set of (row, col) cells, the oracle for set operations.
std::vector<std::pair<int, int>> cells(const Partition& p)
{
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p[r]; ++c)
            out.emplace_back(r, c);
    return out;
}

}  // namespace

TEST(Partition, NormalizesTrailingZerosAndRejectsIncreasingParts)
{
    EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
    EXPECT_EQ(Partition({2, 1}).size(), 3);
    EXPECT_THROW(Partition({1, 2}), ValidationError);
    EXPECT_THROW(Partition({2, -1}), ValidationError);
}

TEST(Partition, Contains)
{
    EXPECT_TRUE(contains({}, {3, 1}));
    EXPECT_TRUE(contains({2, 1}, {2, 1}));
    EXPECT_FALSE(contains({2, 2}, {3, 1}));
}

TEST(Partition, UnionAndIntersection)
{
    EXPECT_EQ(partition_union({2}, {1, 1}), Partition({2, 1}));
    EXPECT_EQ(partition_union({}, {3, 2}), Partition({3, 2}));
    EXPECT_EQ(partition_union({3, 1, 1}, {2, 2}), Partition({3, 2, 1}));
    EXPECT_EQ(partition_intersection({2}, {1, 1}), Partition({1}));
    EXPECT_EQ(partition_intersection({}, {3, 2}), Partition());
    EXPECT_EQ(partition_intersection({3, 1, 1}, {2, 2}), Partition({2, 1}));
}

TEST(Partition, UnionIsCellUnionOnAllSmallPairs)
{
    for (int a = 0; a <= 5; ++a)
        for (const Partition& mu : partitions_of(a))
            for (int b = 0; b <= 5; ++b)
                for (const Partition& nu : partitions_of(b)) {
                    auto cm = cells(mu);
                    auto cn = cells(nu);
                    std::vector<std::pair<int, int>> uni;
                    std::vector<std::pair<int, int>> inter;
                    std::set_union(cm.begin(), cm.end(), cn.begin(), cn.end(),
                                   std::back_inserter(uni));
                    std::set_intersection(cm.begin(), cm.end(), cn.begin(), cn.end(),
                                          std::back_inserter(inter));
                    EXPECT_EQ(cells(partition_union(mu, nu)), uni);
                    EXPECT_EQ(cells(partition_intersection(mu, nu)), inter);
                }
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
    EXPECT_EQ(Partition().conjugate(), Partition());
    EXPECT_EQ(Partition({1, 1, 1, 1}).conjugate(), Partition({4}));
    for (const Partition& p : partitions_of(7)) {
        EXPECT_EQ(p.conjugate().conjugate(), p);
        EXPECT_EQ(p.conjugate().size(), p.size());
    }
}

TEST(Partition, StripType)
{
    EXPECT_EQ(strip_type({1}, {2, 1}), StripType::horizontal_and_vertical);
    EXPECT_EQ(strip_type({2, 1}, {2, 2}), StripType::one_square);
    EXPECT_EQ(strip_type({1, 1, 1}, {2, 1, 1}), StripType::one_square);
    EXPECT_EQ(strip_type({2}, {2}), StripType::equal);
    EXPECT_EQ(strip_type({1}, {3}), StripType::horizontal_strip);
    EXPECT_EQ(strip_type({1}, {1, 1, 1}), StripType::vertical_strip);
    EXPECT_EQ(strip_type({2}, {1, 1}), StripType::not_contained);
    EXPECT_EQ(strip_type({}, {2, 2}), StripType::other);
}

TEST(Partition, StripPredicatesAgreeWithCellCounts)
{
    for (int a = 0; a <= 5; ++a)
        for (const Partition& lambda : partitions_of(a))
            for (int b = 0; b <= a; ++b)
                for (const Partition& mu : partitions_of(b)) {
                    if (!contains(mu, lambda))
                        continue;
                    bool one_per_col = true;
                    bool one_per_row = true;
                    for (int r = 0; r < lambda.length(); ++r)
                        one_per_row = one_per_row && lambda[r] - mu[r] <= 1;
                    const Partition lc = lambda.conjugate();
                    const Partition mc = mu.conjugate();
                    for (int c = 0; c < lc.length(); ++c)
                        one_per_col = one_per_col && lc[c] - mc[c] <= 1;
                    EXPECT_EQ(is_horizontal_strip(mu, lambda), one_per_col);
                    EXPECT_EQ(is_vertical_strip(mu, lambda), one_per_row);
                }
}

TEST(Partition, ColumnStats)
{
    EXPECT_EQ(column_stats({4, 3, 2, 2, 1}), (ColumnStats{4, 5, 2}));
    EXPECT_EQ(column_stats({}), (ColumnStats{0, 0, 0}));
    EXPECT_EQ(column_stats({1, 1}), (ColumnStats{1, 2, 0}));
}

TEST(Partition, FirstDifferingRow)
{
    EXPECT_EQ(first_differing_row({2, 1}, {2, 1}), -1);
    EXPECT_EQ(first_differing_row({2, 1}, {2, 2}), 1);
    EXPECT_EQ(first_differing_row({}, {1}), 0);
}

TEST(Partition, TextForm)
{
    EXPECT_EQ(to_string(Partition({3, 1, 1})), "[3,1,1]");
    EXPECT_EQ(to_string(Partition()), "[]");
    EXPECT_EQ(parse_partition(" [ 3, 1 ,1 ] "), Partition({3, 1, 1}));
    EXPECT_THROW(parse_partition("3,1"), ValidationError);
    EXPECT_THROW(parse_partition("[1,2]"), ValidationError);
    EXPECT_THROW(parse_partition("[2,]"), ValidationError);
}

TEST(Partition, CountsOfPartitions)
{
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n < static_cast<int>(p.size()); ++n)
        EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
    EXPECT_EQ(partitions_of(6, 2).size(), 4u);
}

TEST(Partition, ConjugationDualities)
{
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n))
            ASSERT_EQ(p.conjugate().conjugate(), p);
    for (int a = 0; a <= 6; ++a)
        for (const Partition& lambda : partitions_of(a))
            for (int b = 0; b <= 6; ++b)
                for (const Partition& mu : partitions_of(b)) {
                    const Partition mc = mu.conjugate();
                    const Partition lc = lambda.conjugate();
                    EXPECT_EQ(contains(mu, lambda), contains(mc, lc));
                    EXPECT_EQ(partition_union(mu, lambda).size() +
                                  partition_intersection(mu, lambda).size(),
                              mu.size() + lambda.size());
                    if (a - b >= 2)
                        EXPECT_EQ(strip_type(mu, lambda) == StripType::horizontal_strip,
                                  strip_type(mc, lc) == StripType::vertical_strip);
                }
}
