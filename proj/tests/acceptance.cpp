// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixture.hpp"
#include "ostab/bijections.hpp"
#include "ostab/counting.hpp"
#include "ostab/growth.hpp"
#include "ostab/jeu_de_taquin.hpp"
#include "ostab/knuth_growth.hpp"
#include "ostab/verify.hpp"

using namespace ostab;
using fixtures::load_fixture;

namespace {

std::vector<Partition> parse_list(const std::vector<std::string>& items)
{
    std::vector<Partition> out;
    for (const auto& s : items) {
        std::vector<int> parts;
        if (s != "0")
            for (char c : s)
                parts.push_back(c - '0');
        out.emplace_back(parts);
    }
    return out;
}

const Tableau& running_example()
{
    static const Tableau t = Tableau::from_numbers(
        {{1, 3, 4, 8}, {2, 6, 7}, {5, 10}, {9, 12}, {11}});
    return t;
}

const Tableau& thm4_example()
{
    static const Tableau t = Tableau::from_numbers(
        {{1, 1, 1, 1, 1, 3, 3}, {2, 2, 3, 3, 4, 4}, {3, 3}, {4}});
    return t;
}

// Each check returns an empty string on success, else a reason.
using Check = std::function<std::string()>;

std::string criterion1()
{
    // The diagonal of the staircase, read from its top-left end to the
    // bottom-right end next to the marker rows.
    const auto diagonal = parse_list({"0", "1", "11", "21", "22", "21", "31", "311", "3111", "311",
                                     "31", "21", "11", "1", "0"});
    const OscillatingTrace tr = syt_to_oscillating_traced(running_example(), 3);
    if (tr.diagonal != diagonal)
        return "staircase diagonal differs from the fixture";
    const std::vector<Partition> expected(diagonal.begin(), diagonal.begin() + 13);
    if (tr.result.shapes != expected)
        return "oscillating tableau differs from the truncated diagonal";
    // The listed sequence ∅,1,11,21,31,...,22,21,11 is this diagonal read in
    // the opposite direction; it is not the image.
    const auto listed = parse_list({"0", "1", "11", "21", "31", "311", "3111", "311", "31", "21",
                                    "22", "21", "11"});
    std::vector<Partition> reversed(diagonal.rbegin(), diagonal.rbegin() + 13);
    if (listed != reversed)
        return "listed sequence is not the reversed diagonal";
    if (oscillating_to_syt(tr.result) != running_example())
        return "inverse does not recover the tableau";
    return {};
}

std::string criterion2()
{
    const OscillatingTrace tr = syt_to_oscillating_traced(running_example(), 3);
    const auto fx = load_fixture("example_square.txt");
    const Filling& sq = tr.square;
    const int n = sq.arrangement().width();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto it = fx.cells.find({x, y});
            if (sq.at(x, y) != (it == fx.cells.end() ? 0 : it->second))
                return "square cell (" + std::to_string(x) + ", " + std::to_string(y) +
                       ") differs from the fixture";
        }
    // Letters in alphabet order I, II, 1..12; cell (c, r) pairs letter r with
    // letter n-1-c.
    auto name = [](int idx) { return idx < 2 ? to_roman(idx + 1) : std::to_string(idx - 1); };
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& [c, r] : sq.support()) {
        const int a = r;
        const int b = n - 1 - c;
        if (a < b)
            pairs.insert({name(a), name(b)});
    }
    const std::set<std::pair<std::string, std::string>> involution{
        {"I", "5"}, {"II", "11"}, {"1", "9"}, {"2", "6"}, {"3", "7"}, {"4", "12"}, {"8", "10"}};
    if (pairs != involution)
        return "square does not encode the involution";
    return {};
}

std::string criterion3()
{
    const GeneralizedTrace tr = ssyt_to_gen_oscillating_traced(thm4_example(), 2, 4);
    const auto expected =
        parse_list({"0", "0", "111", "1", "2111", "1111", "2111", "1", "11"});
    if (tr.result.shapes != expected)
        return "generalized oscillating tableau differs";
    if (tr.result.content() != std::vector<int>{5, 2, 6, 3})
        return "content not (5,2,6,3)";
    const auto fx = load_fixture("semistandard_square.txt");
    const Filling& sq = tr.square;
    const int n = sq.arrangement().width();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto it = fx.cells.find({x, y});
            if (sq.at(x, y) != (it == fx.cells.end() ? 0 : it->second))
                return "matrix entry (" + std::to_string(x) + ", " + std::to_string(y) +
                       ") differs from the fixture";
        }
    if (gen_oscillating_to_ssyt(tr.result) != thm4_example())
        return "inverse does not recover the tableau";
    return {};
}

std::string criterion4()
{
    for (int n = 0; n <= 9; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int m = 0; m <= n; ++m)
                if (count_oscillating(n, k, m) != count_syt(n, 2 * k, m))
                    return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " m=" + std::to_string(m);
    return {};
}

std::string criterion5()
{
    for (int n = 0; n <= 7; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int m = 0; m <= n; ++m) {
                const auto tabs = enumerate_syt(n, 2 * k, m);
                std::set<std::vector<Partition>> image;
                for (const Tableau& t : tabs)
                    image.insert(syt_to_oscillating(t, k).shapes);
                std::set<std::vector<Partition>> all;
                for (const auto& o : enumerate_oscillating(n, k, m))
                    all.insert(o.shapes);
                const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                       " m=" + std::to_string(m);
                if (image.size() != tabs.size())
                    return "not injective at " + at;
                if (image != all)
                    return "image is not the oscillating set at " + at;
            }
    return {};
}

std::string criterion6()
{
    if (bessel_count(3, 1, 1) != 2)
        return "(3,1,1) is not 2";
    for (int n = 0; n <= 10; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int m = 0; m <= 4; ++m) {
                const mpz_class b = bessel_count(n, k, m);
                if (b != count_oscillating(n, k, m) || b != count_syt(n, 2 * k, m))
                    return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " m=" + std::to_string(m);
            }
    return {};
}

std::string criterion7()
{
    SuiteOptions opt;
    opt.random_cases = 500;
    opt.threads = default_thread_count();
    const SuiteResult r = verify_greene(opt);
    if (r.cases != 500)
        return "ran " + std::to_string(r.cases) + " cases";
    return r.ok() ? std::string() : r.first_failure;
}

std::string criterion8()
{
    for (int n = 0; n <= 6; ++n)
        for (const auto& perm : all_permutations(n))
            if (rs_correspondence(perm) != rs_insertion(perm))
                return "permutation of size " + std::to_string(n);
    Rng rng(kDefaultSeed);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> entry(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = dim(rng);
        const int cols = dim(rng);
        std::vector<std::vector<int>> matrix(static_cast<std::size_t>(rows),
                                             std::vector<int>(static_cast<std::size_t>(cols)));
        // top letter i -> column x = i, bottom letter j -> row y = j
        Filling f(CellArrangement::rectangle(rows, cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(rng);
                f.set(i, j, matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            }
        const KnuthDiagram d = knuth_forward_sweep(f, ChainOrientation::north_east);
        PartitionChain p;
        PartitionChain q;
        for (int y = 0; y <= cols; ++y)
            p.push_back(d.label(rows, y));
        for (int x = 0; x <= rows; ++x)
            q.push_back(d.label(x, cols));
        if (std::pair{from_chain(p), from_chain(q)} != rsk_insertion(matrix))
            return "random matrix " + std::to_string(trial);
        if (knuth_backward_sweep(f.arrangement(), d.boundary(), ChainOrientation::north_east) != f)
            return "backward sweep does not recover matrix " + std::to_string(trial);
    }
    return {};
}

std::string criterion9()
{
    for (int n = 0; n <= 6; ++n)
        for (const auto& inv : all_involutions(n)) {
            const auto [p, q] = rs_correspondence(inv);
            if (p != q)
                return "P != Q for an involution of size " + std::to_string(n);
            bool empty_diagonal = true;
            for (int i = 0; i < n; ++i)
                empty_diagonal = empty_diagonal && inv[static_cast<std::size_t>(i)] != i + 1;
            const bool all_even = column_stats(p.shape()).num_odd_columns == 0;
            if (empty_diagonal != all_even)
                return "parity fails for an involution of size " + std::to_string(n);
        }
    return {};
}

std::string criterion10()
{
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int m = 0; m <= n; ++m)
                if (count_syt(n, 2 * k + 1, m) != binomial(n, m) * count_syt(n - m, 2 * k, 0))
                    return "identity fails at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                           " m=" + std::to_string(m);
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int m = 0; m <= n; ++m)
                for (const Tableau& t : enumerate_syt(n, 2 * k + 1, m)) {
                    const OddBoundReduction r = odd_bound_reduce(t, k);
                    if (static_cast<int>(r.marks.size()) != m || r.core.size() != n - m ||
                        column_stats(r.core.shape()).num_odd_columns != 0 ||
                        r.core.num_rows() > 2 * k)
                        return "bad reduction of\n" + format_tableau(t);
                    if (odd_bound_expand(r.core, r.marks, k) != t)
                        return "round trip fails for\n" + format_tableau(t);
                }
    return {};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, Check>> criteria{
        {"running example maps to the truncated staircase diagonal and back", criterion1},
        {"square reconstruction equals the symmetric filling and its involution", criterion2},
        {"semistandard example maps to its generalized oscillating tableau and back",
         criterion3},
        {"oscillating and standard tableaux are equinumerous, n <= 9", criterion4},
        {"standard-to-oscillating map is a bijection, n <= 7, k <= 2", criterion5},
        {"Bessel determinant agrees with brute force, n <= 10, k <= 3, m <= 4", criterion6},
        {"corner labels match Greene ranks on 500 random fillings", criterion7},
        {"growth diagrams reproduce RS and RSK insertion", criterion8},
        {"involutions: empty diagonal iff all columns even, n <= 6", criterion9},
        {"odd column bound identity and reduction round trip", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        try {
            why = criteria[i].second();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (why.empty() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
             << criteria[i].first << " (" << secs << " s)";
        if (!why.empty()) {
            line << " -- " << why;
            ++failed;
        }
        std::cout << line.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
