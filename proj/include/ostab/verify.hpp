#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ostab/growth.hpp"
#include "ostab/tableau.hpp"

namespace ostab {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20070523;

// Random instances for property checks.

/// Weakly decreasing column heights with at most max_cells cells in total and
/// at most max_width columns.
CellArrangement random_arrangement(Rng& rng, int max_width, int max_cells);
/// Random standard 0-1 filling with at most max_ones ones.
Filling random_standard_filling(const CellArrangement& arr, Rng& rng, int max_ones);
/// Random non-negative integer filling with entries <= max_entry.
Filling random_integer_filling(const CellArrangement& arr, Rng& rng, int max_entry);
/// Random semistandard tableau with entries <= max_value, at most max_rows
/// rows and at most max_size cells.
Tableau random_ssyt(Rng& rng, int max_value, int max_rows, int max_size);
/// Uniformly random permutation of 1..n.
std::vector<int> random_permutation(Rng& rng, int n);

/// All permutations of 1..n in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);
/// All involutions of 1..n.
std::vector<std::vector<int>> all_involutions(int n);

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string first_failure;

    bool ok() const noexcept { return failures == 0; }
    void fail(const std::string& what);
    void merge(const SuiteResult& other);
};

struct SuiteOptions {
    int max_n = 6;
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
    int random_cases = 200;
};

/// Standard-tableau bijection: exhaustive round trips and image = full oscillating set for
/// n <= max_n, k = 1..3.
SuiteResult verify_thm3(const SuiteOptions& opt);
/// Semistandard bijection: random round trips, content transport and small exhaustive
/// equinumeration checks.
SuiteResult verify_thm4(const SuiteOptions& opt);
/// Greene's theorem on random standard 0-1 fillings with at most 12 ones.
SuiteResult verify_greene(const SuiteOptions& opt);
/// Bessel determinant against both brute-force counters, n <= max_n, k <= 3,
/// m <= 4.
SuiteResult verify_formula(const SuiteOptions& opt);

/// Checks every corner of one diagram against the brute-force Greene oracle.
bool greene_consistent(const GrowthDiagram& d, std::string* why = nullptr);

/// Threads to use for verification: the OSTAB_THREADS environment variable
/// if set to a positive integer, otherwise the hardware concurrency.
int default_thread_count();

}  // namespace ostab
