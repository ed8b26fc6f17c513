#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "ostab/counting.hpp"
#include "ostab/error.hpp"

using namespace ostab;

namespace {

// All content vectors with given length bound, entries <= max_entry and sum
// <= max_sum.
std::vector<std::vector<int>> contents(int max_len, int max_entry, int max_sum)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int sum) {
        if (!cur.empty())
            out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len)
            return;
        for (int v = 0; v <= max_entry && sum + v <= max_sum; ++v) {
            cur.push_back(v);
            go(sum + v);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

}  // namespace

TEST(Counting, OscillatingExamples)
{
    EXPECT_EQ(count_oscillating(2, 1, 0), 1);
    EXPECT_EQ(count_oscillating(3, 1, 1), 2);
    EXPECT_EQ(count_oscillating(0, 1, 0), 1);
    EXPECT_EQ(count_oscillating(12, 3, 2), count_syt(12, 6, 2));
    EXPECT_EQ(enumerate_oscillating(3, 1, 1).size(), 2u);
}

TEST(Counting, SytExamples)
{
    EXPECT_EQ(count_syt(2, 2, 0), 1);
    EXPECT_EQ(count_syt(3, 2, 1), 2);
    EXPECT_EQ(count_syt(3, 3, 1), 3);
    EXPECT_EQ(num_syt({4, 3, 2, 2, 1}), num_syt_hook({4, 3, 2, 2, 1}));
    EXPECT_EQ(num_syt({3, 2}), 5);
}

TEST(Counting, HookLengthAgreesWithRecursion)
{
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n))
            ASSERT_EQ(num_syt(p), num_syt_hook(p)) << to_string(p);
}

TEST(Counting, EnumerationMatchesCounts)
{
    for (int n = 0; n <= 7; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int m = 0; m <= n; ++m) {
                const auto osc = enumerate_oscillating(n, k, m);
                ASSERT_EQ(count_oscillating(n, k, m), static_cast<long>(osc.size()));
                std::set<std::vector<Partition>> distinct;
                for (const auto& o : osc) {
                    EXPECT_NO_THROW(validate_oscillating(o, k));
                    ASSERT_EQ(o.final_column_length(), m);
                    distinct.insert(o.shapes);
                }
                ASSERT_EQ(distinct.size(), osc.size());
                const auto syt = enumerate_syt(n, 2 * k, m);
                ASSERT_EQ(count_syt(n, 2 * k, m), static_cast<long>(syt.size()));
                for (const Tableau& t : syt)
                    ASSERT_TRUE(is_standard(t) && validate_bounds(t, 2 * k, m));
            }
}

TEST(Counting, StandardEquinumeration)
{
    for (int n = 0; n <= 9; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int m = 0; m <= n; ++m) {
                ASSERT_EQ(count_oscillating(n, k, m), count_syt(n, 2 * k, m));
                if ((n - m) % 2 != 0)
                    ASSERT_EQ(count_oscillating(n, k, m), 0);
            }
}

TEST(Counting, GeneralizedExamples)
{
    EXPECT_EQ(count_gen_oscillating({1}, 1, 1), 1);
    EXPECT_EQ(count_gen_oscillating({5, 2, 6, 3}, 2, 2), count_ssyt({5, 2, 6, 3}, 4, 2));
    EXPECT_GT(count_ssyt({5, 2, 6, 3}, 4, 2), 0);
    EXPECT_EQ(count_ssyt({1}, 2, 1), 1);
    EXPECT_EQ(count_ssyt({2}, 2, 0), 0);
    for (int n = 0; n <= 7; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int m = 0; m <= n; ++m) {
                const std::vector<int> ones(static_cast<std::size_t>(n), 1);
                ASSERT_EQ(count_gen_oscillating(ones, k, m), count_oscillating(n, k, m));
                ASSERT_EQ(count_ssyt(ones, 2 * k, m), count_syt(n, 2 * k, m));
            }
}

TEST(Counting, SemistandardEquinumeration)
{
    for (const auto& j : contents(4, 3, 8))
        for (int k = 1; k <= 2; ++k)
            for (int m = 0; m <= 8; ++m) {
                const mpz_class g = count_gen_oscillating(j, k, m);
                ASSERT_EQ(g, count_ssyt(j, 2 * k, m));
                ASSERT_EQ(g, static_cast<long>(enumerate_gen_oscillating(j, k, m).size()));
                ASSERT_EQ(g, static_cast<long>(enumerate_ssyt(j, 2 * k, m).size()));
            }
}

TEST(Series, BesselCoefficients)
{
    const ExpSeries i1 = ExpSeries::bessel_i(5, 1);
    EXPECT_EQ(i1[1], 1);
    EXPECT_EQ(i1[3], mpq_class(1, 2));
    EXPECT_EQ(i1[2], 0);
    const ExpSeries neg = ExpSeries::bessel_i(5, -2);
    const ExpSeries pos = ExpSeries::bessel_i(5, 2);
    for (int i = 0; i <= 5; ++i)
        EXPECT_EQ(neg[i], pos[i]);
    const ExpSeries sq = i1 * i1;
    EXPECT_EQ(sq[2], 1);
    EXPECT_EQ(sq.egf_coefficient(2), 2);
    const ExpSeries half = ExpSeries::constant(2, mpq_class(1, 2));
    EXPECT_THROW(half.egf_coefficient(0), std::logic_error);
}

TEST(Series, BesselCount)
{
    EXPECT_EQ(bessel_count(3, 1, 1), 2);
    EXPECT_EQ(bessel_count(0, 1, 0), 1);
    EXPECT_EQ(bessel_count(0, 2, 1), 0);
    EXPECT_EQ(bessel_count(12, 3, 2), count_oscillating(12, 3, 2));
    EXPECT_THROW(bessel_count(3, 0, 1), PreconditionError);
    for (int n = 0; n <= 10; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int m = 0; m <= 4; ++m)
                ASSERT_EQ(bessel_count(n, k, m), count_oscillating(n, k, m))
                    << n << ' ' << k << ' ' << m;
}

TEST(Counting, OddBoundIdentity)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(3, 4), 0);
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int m = 0; m <= n; ++m)
                ASSERT_EQ(count_syt(n, 2 * k + 1, m), binomial(n, m) * count_syt(n - m, 2 * k, 0));
}
