#include "ostab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "ostab/bijections.hpp"
#include "ostab/counting.hpp"
#include "ostab/error.hpp"

namespace ostab {

namespace {

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Runs task(i) for i < count on `threads` workers and merges the results in
// index order, so the report does not depend on scheduling.
SuiteResult run_parallel(const std::string& name, int count, int threads,
                         const std::function<SuiteResult(int)>& task)
{
    std::vector<SuiteResult> parts(static_cast<std::size_t>(std::max(count, 0)));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i = next++; i < count; i = next++) {
            try {
                parts[static_cast<std::size_t>(i)] = task(i);
            } catch (const std::exception& e) {
                parts[static_cast<std::size_t>(i)].fail(std::string("exception: ") + e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(threads, 1); ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    SuiteResult out;
    out.name = name;
    for (const auto& p : parts)
        out.merge(p);
    return out;
}

std::string join(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

int partial_sum(const Partition& p, int k)
{
    int s = 0;
    for (int i = 0; i < k; ++i)
        s += p[i];
    return s;
}

}  // namespace

// --- random instances -----------------------------------------------------------

CellArrangement random_arrangement(Rng& rng, int max_width, int max_cells)
{
    const int w = uniform(rng, 1, std::max(max_width, 1));
    int remaining = max_cells;
    int prev = uniform(rng, 1, std::max(1, std::min(max_width, max_cells)));
    std::vector<int> h;
    for (int x = 0; x < w; ++x) {
        const int v = x == 0 ? std::min(prev, remaining) : uniform(rng, 0, std::min(prev, remaining));
        h.push_back(v);
        remaining -= v;
        prev = v;
    }
    return CellArrangement(std::move(h));
}

Filling random_standard_filling(const CellArrangement& arr, Rng& rng, int max_ones)
{
    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < arr.width(); ++x)
        for (int y = 0; y < arr.height(x); ++y)
            cells.emplace_back(x, y);
    std::shuffle(cells.begin(), cells.end(), rng);
    const int target = uniform(rng, 0, std::max(max_ones, 0));
    std::set<int> cols;
    std::set<int> rows;
    Filling f(arr);
    int placed = 0;
    for (const auto& [x, y] : cells) {
        if (placed == target)
            break;
        if (cols.count(x) || rows.count(y))
            continue;
        f.set(x, y, 1);
        cols.insert(x);
        rows.insert(y);
        ++placed;
    }
    return f;
}

Filling random_integer_filling(const CellArrangement& arr, Rng& rng, int max_entry)
{
    Filling f(arr);
    for (int x = 0; x < arr.width(); ++x)
        for (int y = 0; y < arr.height(x); ++y)
            f.set(x, y, uniform(rng, 0, max_entry));
    return f;
}

Tableau random_ssyt(Rng& rng, int max_value, int max_rows, int max_size)
{
    PartitionChain chain{Partition{}};
    int size = 0;
    for (int v = 1; v <= max_value; ++v) {
        const Partition base = chain.back();
        Partition cur = base;
        const int want = uniform(rng, 0, std::max(0, std::min(4, max_size - size)));
        for (int attempt = 0; attempt < 20 && cur.size() - base.size() < want; ++attempt) {
            const int r = uniform(rng, 0, std::max(0, std::min(cur.length(), max_rows - 1)));
            if (r >= max_rows)
                continue;
            if (r > 0 && cur[r] + 1 > base[r - 1])
                continue;
            cur = cur.add_cell(r);
        }
        size = cur.size();
        chain.push_back(std::move(cur));
    }
    return from_chain(chain);
}

std::vector<int> random_permutation(Rng& rng, int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

std::vector<std::vector<int>> all_permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> all_involutions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> p(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        while (i < n && p[static_cast<std::size_t>(i)] != 0)
            ++i;
        if (i == n) {
            out.push_back(p);
            return;
        }
        const auto a = static_cast<std::size_t>(i);
        p[a] = i + 1;
        rec(i + 1);
        for (int j = i + 1; j < n; ++j) {
            const auto b = static_cast<std::size_t>(j);
            if (p[b] != 0)
                continue;
            p[a] = j + 1;
            p[b] = i + 1;
            rec(i + 1);
            p[b] = 0;
        }
        p[a] = 0;
    };
    rec(0);
    return out;
}

// --- results ------------------------------------------------------------------

void SuiteResult::fail(const std::string& what)
{
    if (failures++ == 0)
        first_failure = what;
}

void SuiteResult::merge(const SuiteResult& other)
{
    cases += other.cases;
    if (other.failures > 0 && failures == 0)
        first_failure = other.first_failure;
    failures += other.failures;
}

int default_thread_count()
{
    if (const char* env = std::getenv("OSTAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// --- suites -------------------------------------------------------------------

SuiteResult verify_thm3(const SuiteOptions& opt)
{
    const int count = (opt.max_n + 1) * 3;
    return run_parallel("thm3", count, opt.threads, [&](int idx) {
        const int n = idx / 3;
        const int k = idx % 3 + 1;
        SuiteResult r;
        for (int m = 0; m <= n; ++m) {
            const auto syts = enumerate_syt(n, 2 * k, m);
            const auto oscs = enumerate_oscillating(n, k, m);
            std::set<std::vector<Partition>> image;
            for (const Tableau& t : syts) {
                ++r.cases;
                const OscillatingTableau o = syt_to_oscillating(t, k);
                validate_oscillating(o, k);
                if (o.length() != n || o.final_column_length() != m)
                    r.fail("parameters not transported for\n" + format_tableau(t));
                if (oscillating_to_syt(o) != t)
                    r.fail("round trip failed for\n" + format_tableau(t));
                image.insert(o.shapes);
            }
            std::set<std::vector<Partition>> all;
            for (const auto& o : oscs)
                all.insert(o.shapes);
            if (image.size() != syts.size())
                r.fail("not injective at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " m=" + std::to_string(m));
            if (image != all)
                r.fail("image differs from the oscillating set at n=" + std::to_string(n) +
                       " k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
        return r;
    });
}

SuiteResult verify_thm4(const SuiteOptions& opt)
{
    // exhaustive part: contents of length <= 3 with entries <= 3
    std::vector<std::vector<int>> contents;
    const int max_sum = std::min(opt.max_n, 8);
    std::function<void(std::vector<int>&)> gen = [&](std::vector<int>& j) {
        const int s = std::accumulate(j.begin(), j.end(), 0);
        if (!j.empty() && s <= max_sum)
            contents.push_back(j);
        if (j.size() == 3)
            return;
        for (int v = 0; v <= 3 && s + v <= max_sum; ++v) {
            j.push_back(v);
            gen(j);
            j.pop_back();
        }
    };
    std::vector<int> seed_vec;
    gen(seed_vec);

    const int exhaustive = static_cast<int>(contents.size()) * 2;
    const int total = exhaustive + opt.random_cases;
    return run_parallel("thm4", total, opt.threads, [&](int idx) {
        SuiteResult r;
        if (idx < exhaustive) {
            const auto& j = contents[static_cast<std::size_t>(idx / 2)];
            const int k = idx % 2 + 1;
            const int n = static_cast<int>(j.size());
            const int size = std::accumulate(j.begin(), j.end(), 0);
            for (int m = 0; m <= size; ++m) {
                const auto ssyts = enumerate_ssyt(j, 2 * k, m);
                const auto gos = enumerate_gen_oscillating(j, k, m);
                std::set<std::vector<Partition>> image;
                std::set<std::vector<Partition>> all;
                for (const auto& o : gos)
                    all.insert(o.shapes);
                for (const Tableau& t : ssyts) {
                    ++r.cases;
                    const auto o = ssyt_to_gen_oscillating(t, k, n);
                    if (gen_oscillating_to_ssyt(o) != t)
                        r.fail("round trip failed for\n" + format_tableau(t));
                    image.insert(o.shapes);
                }
                if (image != all || image.size() != ssyts.size())
                    r.fail("image differs from the generalized oscillating set for content (" +
                           join(j) + ") k=" +
                           std::to_string(k) + " m=" + std::to_string(m));
            }
            return r;
        }
        Rng rng(opt.seed + static_cast<std::uint64_t>(idx));
        const int k = uniform(rng, 1, 2);
        const Tableau t = random_ssyt(rng, 4, 2 * k, 12);
        const int n = std::max(t.max_numeral(), 1);
        ++r.cases;
        const auto o = ssyt_to_gen_oscillating(t, k, n);
        validate_generalized(o, k);
        if (o.content() != t.content(n))
            r.fail("content not transported for\n" + format_tableau(t));
        if (o.final_column_length() != column_stats(t.shape()).num_odd_columns)
            r.fail("final column length wrong for\n" + format_tableau(t));
        if (gen_oscillating_to_ssyt(o) != t)
            r.fail("round trip failed for\n" + format_tableau(t));
        return r;
    });
}

bool greene_consistent(const GrowthDiagram& d, std::string* why)
{
    const CellArrangement& arr = d.arrangement();
    const Filling& f = d.filling();
    for (int x = 0; x <= arr.width(); ++x)
        for (int y = 0; y <= arr.corner_height(x); ++y) {
            int ones = 0;
            for (const auto& [cx, cy] : f.support())
                ones += cx < x && cy < y;
            const Partition& lambda = d.label(x, y);
            if (lambda.size() != ones) {
                if (why)
                    *why = "label size mismatch at corner (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")";
                return false;
            }
            const auto profile = greene_profile_bruteforce(f, x, y);
            const Partition conj = lambda.conjugate();
            for (int k = 1; k <= ones; ++k) {
                const GreeneRanks g = profile[static_cast<std::size_t>(k - 1)];
                if (g.ne != partial_sum(lambda, k) || g.se != partial_sum(conj, k)) {
                    if (why)
                        *why = "corner (" + std::to_string(x) + ", " + std::to_string(y) +
                               ") label " + to_string(lambda) + " k=" + std::to_string(k) +
                               ": oracle ne=" + std::to_string(g.ne) + " se=" +
                               std::to_string(g.se);
                    return false;
                }
            }
        }
    return true;
}

SuiteResult verify_greene(const SuiteOptions& opt)
{
    return run_parallel("greene", opt.random_cases, opt.threads, [&](int idx) {
        Rng rng(opt.seed + static_cast<std::uint64_t>(idx));
        const CellArrangement arr = random_arrangement(rng, 8, 40);
        const Filling f = random_standard_filling(arr, rng, 12);
        SuiteResult r;
        ++r.cases;
        std::string why;
        if (!greene_consistent(forward_sweep(f), &why))
            r.fail(why + "\n" + format_filling(f));
        return r;
    });
}

SuiteResult verify_formula(const SuiteOptions& opt)
{
    const int per_n = 3 * 5;
    return run_parallel("formula", (opt.max_n + 1) * per_n, opt.threads, [&](int idx) {
        const int n = idx / per_n;
        const int k = idx % per_n / 5 + 1;
        const int m = idx % 5;
        SuiteResult r;
        ++r.cases;
        const mpz_class osc = count_oscillating(n, k, m);
        const mpz_class syt = count_syt(n, 2 * k, m);
        const mpz_class bes = bessel_count(n, k, m);
        if (osc != syt || osc != bes)
            r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" +
                   std::to_string(m) + ": oscillating " + osc.get_str() + ", syt " +
                   syt.get_str() + ", bessel " + bes.get_str());
        return r;
    });
}

}  // namespace ostab
