#include <gtest/gtest.h>

#include <set>

#include "ostab/bijections.hpp"
#include "ostab/counting.hpp"
#include "ostab/error.hpp"
#include "ostab/verify.hpp"

using namespace ostab;

namespace {

Tableau running_example()
{
    return Tableau::from_numbers({{1, 3, 4, 8}, {2, 6, 7}, {5, 10}, {9, 12}, {11}});
}

Tableau semistandard_example()
{
    return Tableau::from_numbers({{1, 1, 1, 1, 1, 3, 3}, {2, 2, 3, 3, 4, 4}, {3, 3}, {4}});
}

std::vector<Partition> shapes(const std::string& text)
{
    return parse_shapes(text);
}

}  // namespace

TEST(Oscillating, RunningExample)
{
    const OscillatingTrace tr = syt_to_oscillating_traced(running_example(), 3);
    EXPECT_EQ(tr.augmented, parse_tableau("I II 3 4\n1 6 7 8\n2 10\n5 12\n9\n11\n"));
    EXPECT_EQ(tr.result.shapes,
              shapes("[]\n[1]\n[1,1]\n[2,1]\n[2,2]\n[2,1]\n[3,1]\n[3,1,1]\n[3,1,1,1]\n[3,1,1]\n"
                     "[3,1]\n[2,1]\n[1,1]\n"));
    EXPECT_EQ(tr.result.length(), 12);
    EXPECT_EQ(tr.result.final_column_length(), 2);
    EXPECT_LE(tr.result.max_columns(), 3);
    // forced tail of the diagonal
    EXPECT_EQ(std::vector<Partition>(tr.diagonal.end() - 3, tr.diagonal.end()),
              shapes("[1,1]\n[1]\n[]\n"));
    EXPECT_EQ(oscillating_to_syt(tr.result), running_example());
}

TEST(Oscillating, SquareIsSymmetricInvolution)
{
    const OscillatingTrace tr = syt_to_oscillating_traced(running_example(), 3);
    const Filling& sq = tr.square;
    const int n = sq.arrangement().width();
    ASSERT_EQ(n, 14);
    EXPECT_TRUE(sq.is_standard_01());
    EXPECT_EQ(sq.total(), 14);
    for (const auto& [c, r] : sq.support()) {
        EXPECT_EQ(sq.at(n - 1 - r, n - 1 - c), 1);
        EXPECT_NE(c + r, n - 1) << "cross on the diagonal";
    }
}

TEST(Oscillating, SmallExamples)
{
    EXPECT_EQ(syt_to_oscillating(Tableau::from_numbers({{1}}), 1).shapes, shapes("[]\n[1]\n"));
    EXPECT_EQ(syt_to_oscillating(Tableau::from_numbers({{1}, {2}}), 1).shapes,
              shapes("[]\n[1]\n[]\n"));
    EXPECT_EQ(syt_to_oscillating(Tableau(), 1).shapes, shapes("[]\n"));
    EXPECT_EQ(oscillating_to_syt({shapes("[]\n[1]\n")}), Tableau::from_numbers({{1}}));
    EXPECT_EQ(oscillating_to_syt({shapes("[]\n")}), Tableau());
}

TEST(Oscillating, Preconditions)
{
    EXPECT_THROW(syt_to_oscillating(Tableau::from_numbers({{1}, {2}, {3}}), 1), PreconditionError);
    EXPECT_THROW(syt_to_oscillating(Tableau::from_numbers({{1, 1}}), 1), Error);
    EXPECT_THROW(oscillating_to_syt({shapes("[]\n[2]\n")}), PreconditionError);
    EXPECT_THROW(oscillating_to_syt({shapes("[]\n[1]\n[2]\n")}), PreconditionError);
    EXPECT_THROW(validate_oscillating({shapes("[]\n[1]\n[2]\n[2,1]\n")}, 1), PreconditionError);
}

TEST(Oscillating, ExhaustiveBothDirections)
{
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= n; ++m) {
                for (const Tableau& t : enumerate_syt(n, 2 * k, m)) {
                    const OscillatingTableau o = syt_to_oscillating(t, k);
                    ASSERT_EQ(o.length(), n);
                    ASSERT_EQ(o.final_column_length(), m);
                    ASSERT_LE(o.max_columns(), k);
                    ASSERT_EQ(oscillating_to_syt(o), t) << format_tableau(t);
                }
                if (n > 6 && k == 3)
                    continue;
                for (const OscillatingTableau& o : enumerate_oscillating(n, k, m))
                    ASSERT_EQ(syt_to_oscillating(oscillating_to_syt(o), k), o)
                        << format_shapes(o.shapes);
            }
}

TEST(Generalized, Example)
{
    const GeneralizedTrace tr = ssyt_to_gen_oscillating_traced(semistandard_example(), 2);
    EXPECT_EQ(tr.augmented, parse_tableau("I II 1 1 1 3 3\n1 1 2 3 3 4 4\n2 3\n3 4\n"));
    EXPECT_EQ(tr.result.shapes, shapes("[]\n[]\n[1,1,1]\n[1]\n[2,1,1,1]\n[1,1,1,1]\n[2,1,1,1]\n"
                                       "[1]\n[1,1]\n"));
    EXPECT_EQ(tr.result.content(), (std::vector<int>{5, 2, 6, 3}));
    EXPECT_EQ(tr.result.final_column_length(), 2);
    EXPECT_EQ(gen_oscillating_to_ssyt(tr.result), semistandard_example());
}

TEST(Generalized, TrailingZeroContent)
{
    const Tableau t = Tableau::from_numbers({{1, 1}});
    const GeneralizedOscillatingTableau o = ssyt_to_gen_oscillating(t, 1, 3);
    EXPECT_EQ(o.length(), 3);
    EXPECT_EQ(o.content(), (std::vector<int>{2, 0, 0}));
    EXPECT_EQ(gen_oscillating_to_ssyt(o), t);
}

TEST(Generalized, EmptyCases)
{
    EXPECT_EQ(ssyt_to_gen_oscillating(Tableau(), 1).shapes, shapes("[]\n"));
    EXPECT_EQ(gen_oscillating_to_ssyt({shapes("[]\n")}), Tableau());
    EXPECT_EQ(gen_oscillating_to_ssyt({shapes("[]\n[]\n[]\n")}), Tableau());
}

TEST(Generalized, Preconditions)
{
    EXPECT_THROW(ssyt_to_gen_oscillating(Tableau::from_numbers({{1}, {2}, {3}}), 1),
                 PreconditionError);
    EXPECT_THROW(gen_oscillating_to_ssyt({shapes("[]\n[]\n[2]\n")}), PreconditionError);
    EXPECT_THROW(gen_oscillating_to_ssyt({shapes("[]\n[]\n")}), PreconditionError);
}

TEST(Generalized, RandomRoundTrips)
{
    Rng rng(kDefaultSeed);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 1 + trial % 3;
        const Tableau t = random_ssyt(rng, 4, 2 * k, 12);
        const int n = std::max(t.max_numeral(), 1);
        const GeneralizedOscillatingTableau o = ssyt_to_gen_oscillating(t, k, n);
        EXPECT_NO_THROW(validate_generalized(o, k));
        ASSERT_EQ(o.content(), t.content(n));
        ASSERT_EQ(o.final_column_length(), column_stats(t.shape()).num_odd_columns);
        ASSERT_EQ(gen_oscillating_to_ssyt(o), t) << format_tableau(t);
    }
}

TEST(Generalized, ImageIsTheFullSet)
{
    for (const std::vector<int>& j :
         std::vector<std::vector<int>>{{2, 1}, {1, 2, 1}, {3, 0, 2}, {2, 2, 2}, {1, 1, 1, 1}})
        for (int k = 1; k <= 2; ++k)
            for (int m = 0; m <= 6; ++m) {
                std::set<std::vector<Partition>> image;
                const auto tabs = enumerate_ssyt(j, 2 * k, m);
                for (const Tableau& t : tabs)
                    image.insert(ssyt_to_gen_oscillating(t, k, static_cast<int>(j.size())).shapes);
                std::set<std::vector<Partition>> all;
                for (const auto& o : enumerate_gen_oscillating(j, k, m))
                    all.insert(o.shapes);
                ASSERT_EQ(image.size(), tabs.size());
                ASSERT_EQ(image, all);
            }
}

TEST(Generalized, SpecializesToStandardCase)
{
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 6; ++n)
            for (int m = 0; m <= n; ++m)
                for (const Tableau& t : enumerate_syt(n, 2 * k, m)) {
                    const auto g = ssyt_to_gen_oscillating(t, k, n);
                    std::vector<Partition> even;
                    for (std::size_t i = 0; i < g.shapes.size(); i += 2)
                        even.push_back(g.shapes[i]);
                    ASSERT_EQ(even, syt_to_oscillating(t, k).shapes) << format_tableau(t);
                }
}

TEST(OddBound, Examples)
{
    const OddBoundReduction r = odd_bound_reduce(Tableau::from_numbers({{1}, {2}, {3}}), 1);
    EXPECT_EQ(r.marks.size(), 1u);
    EXPECT_EQ(r.core.shape(), Partition({1, 1}));
    EXPECT_EQ(odd_bound_expand(r.core, r.marks, 1), Tableau::from_numbers({{1}, {2}, {3}}));

    const Tableau even = Tableau::from_numbers({{1, 2}, {3, 4}});
    const OddBoundReduction e = odd_bound_reduce(even, 1);
    EXPECT_EQ(e.core, even);
    EXPECT_TRUE(e.marks.empty());

    EXPECT_EQ(odd_bound_expand(Tableau(), {1}), Tableau::from_numbers({{1}}));
    EXPECT_THROW(odd_bound_reduce(Tableau::from_numbers({{1}, {2}, {3}}), 0), PreconditionError);
    EXPECT_THROW(odd_bound_expand(Tableau::from_numbers({{1}, {2}}), {2}), PreconditionError);
}

TEST(OddBound, SmallFamilyIsBijective)
{
    std::set<std::pair<std::string, std::set<int>>> images;
    const auto tabs = enumerate_syt(3, 3, 1);
    ASSERT_EQ(tabs.size(), 3u);
    for (const Tableau& t : tabs) {
        const OddBoundReduction r = odd_bound_reduce(t, 1);
        EXPECT_EQ(standardize(r.core), Tableau::from_numbers({{1}, {2}}));
        images.insert({format_tableau(r.core), r.marks});
    }
    EXPECT_EQ(images.size(), 3u);
}

TEST(OddBound, ExhaustiveRoundTrip)
{
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int m = 0; m <= n; ++m)
                for (const Tableau& t : enumerate_syt(n, 2 * k + 1, m)) {
                    const OddBoundReduction r = odd_bound_reduce(t, k);
                    ASSERT_EQ(static_cast<int>(r.marks.size()), m);
                    ASSERT_EQ(column_stats(r.core.shape()).num_odd_columns, 0);
                    ASSERT_EQ(odd_bound_expand(r.core, r.marks, k), t);
                }
}

TEST(TextForms, Shapes)
{
    const std::vector<Partition> s = shapes("# comment\n[]\n[1]\n\n[1,1]\n");
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(format_shapes(s), "[]\n[1]\n[1,1]\n");
    EXPECT_THROW(shapes("[]\n1\n"), ValidationError);
}
