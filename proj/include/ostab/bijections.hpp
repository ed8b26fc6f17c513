#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ostab/growth.hpp"
#include "ostab/knuth_growth.hpp"
#include "ostab/tableau.hpp"

namespace ostab {

/// ∅ = λ^0, λ^1, ..., λ^n with consecutive shapes differing by one square.
struct OscillatingTableau {
    std::vector<Partition> shapes;

    int length() const noexcept { return static_cast<int>(shapes.size()) - 1; }
    /// m such that the last shape is (1^m); -1 if it is not a column.
    int final_column_length() const noexcept;
    int max_columns() const noexcept;

    friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;
};

/// ∅ = λ^0, ..., λ^{2n} with λ^{2i-2} ⊇ λ^{2i-1} ⊆ λ^{2i}, each step a
/// (possibly empty) vertical strip.
struct GeneralizedOscillatingTableau {
    std::vector<Partition> shapes;

    int length() const noexcept { return (static_cast<int>(shapes.size()) - 1) / 2; }
    int final_column_length() const noexcept;
    int max_columns() const noexcept;
    /// j_1..j_n from |λ^{2i-2}| - 2|λ^{2i-1}| + |λ^{2i}| = j_{n-i+1}.
    std::vector<int> content() const;

    friend bool operator==(const GeneralizedOscillatingTableau&,
                           const GeneralizedOscillatingTableau&) = default;
};

/// Throws PreconditionError unless `o` is an oscillating tableau ending in a
/// column shape with every shape having at most k columns (k < 0: unbounded).
void validate_oscillating(const OscillatingTableau& o, int k = -1);
void validate_generalized(const GeneralizedOscillatingTableau& o, int k = -1);

/// Intermediate objects of the standard-tableau bijection, for inspection.
struct OscillatingTrace {
    Tableau augmented;           ///< tableau with markers slid into the first row
    Filling square;              ///< symmetric 0-1 filling, physical coordinates
    Filling staircase;           ///< part of the square strictly below the anti-diagonal
    std::vector<Partition> diagonal;  ///< labels of corners (i, N-i), i = 0..N
    OscillatingTableau result;
};

/// Standard tableau with columns of length <= 2k  ->  oscillating tableau of
/// length n with at most k columns, ending at (1^m), m = number of odd columns.
OscillatingTableau syt_to_oscillating(const Tableau& t, int k);
OscillatingTrace syt_to_oscillating_traced(const Tableau& t, int k);
Tableau oscillating_to_syt(const OscillatingTableau& o);

struct GeneralizedTrace {
    Tableau augmented;
    Filling square;      ///< symmetric integer matrix, physical coordinates
    Filling staircase;
    BoundaryWord boundary;  ///< every staircase boundary label, λ^1..λ^{2N}
    GeneralizedOscillatingTableau result;
};

/// Semistandard tableau with entries <= n and columns <= 2k  ->  generalized
/// oscillating tableau. n defaults to the largest entry; a larger n makes the
/// trailing content entries zero.
GeneralizedOscillatingTableau ssyt_to_gen_oscillating(const Tableau& t, int k, int n = 0);
GeneralizedTrace ssyt_to_gen_oscillating_traced(const Tableau& t, int k, int n = 0);
Tableau gen_oscillating_to_ssyt(const GeneralizedOscillatingTableau& o);

struct OddBoundReduction {
    /// Remaining tableau; keeps the original values, i.e. its entries are the
    /// complement of `marks` in 1..n. Every column has even length.
    Tableau core;
    std::set<int> marks;

    friend bool operator==(const OddBoundReduction&, const OddBoundReduction&) = default;
};

/// Removes odd columns by reverse row insertion, starting each time from the
/// last cell of the right-most odd column. With k >= 0 the input columns must
/// not exceed 2k+1.
OddBoundReduction odd_bound_reduce(const Tableau& t, int k = -1);
/// Inverse of odd_bound_reduce: row-inserts the marks into the core in
/// increasing order.
Tableau odd_bound_expand(const Tableau& core, const std::set<int>& marks, int k = -1);

/// Replaces entries by 1..size preserving their relative order.
Tableau standardize(const Tableau& t);

/// One bracketed partition per line.
std::string format_shapes(const std::vector<Partition>& shapes);
std::vector<Partition> parse_shapes(std::string_view text);

/// Longest chain of 1s (with multiplicity for larger entries) strictly
/// increasing in both coordinates.
int longest_ne_chain(const Filling& f);

}  // namespace ostab
