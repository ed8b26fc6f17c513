#pragma once

#include <gmpxx.h>

#include <vector>

#include "ostab/bijections.hpp"
#include "ostab/partition.hpp"
#include "ostab/tableau.hpp"

namespace ostab {

// Exhaustive counters and generators for both sides of the two bijections,
// plus the Bessel-determinant closed form. All counts are exact.

mpz_class count_oscillating(int n, int k, int m);
std::vector<OscillatingTableau> enumerate_oscillating(int n, int k, int m);

/// Number of standard Young tableaux of the given shape, by recursion over
/// removable corners.
mpz_class num_syt(const Partition& shape);
/// The same number from the hook-length formula.
mpz_class num_syt_hook(const Partition& shape);

/// Standard tableaux of size n, columns <= max_col_len, exactly odd_cols
/// columns of odd length.
mpz_class count_syt(int n, int max_col_len, int odd_cols);
std::vector<Tableau> enumerate_syt(int n, int max_col_len, int odd_cols);

/// Generalized oscillating tableaux with content j (j[0] = j_1), shapes of
/// at most k columns, ending at (1^m).
mpz_class count_gen_oscillating(const std::vector<int>& j, int k, int m);
std::vector<GeneralizedOscillatingTableau> enumerate_gen_oscillating(const std::vector<int>& j,
                                                                     int k, int m);

/// Semistandard tableaux with j_i entries equal to i, columns <= max_col_len
/// and exactly odd_cols odd columns.
mpz_class count_ssyt(const std::vector<int>& j, int max_col_len, int odd_cols);
std::vector<Tableau> enumerate_ssyt(const std::vector<int>& j, int max_col_len, int odd_cols);

/// Power series in t truncated after t^order, with exact rational
/// coefficients (c[i] is the ordinary coefficient of t^i).
class ExpSeries {
public:
    explicit ExpSeries(int order);
    static ExpSeries constant(int order, const mpq_class& c);
    /// I_alpha(2t) = sum_l t^(2l+|alpha|) / (l! (l+|alpha|)!).
    static ExpSeries bessel_i(int order, int alpha);

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    mpq_class& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }

    ExpSeries& operator+=(const ExpSeries& o);
    ExpSeries& operator-=(const ExpSeries& o);
    friend ExpSeries operator+(ExpSeries a, const ExpSeries& b) { return a += b; }
    friend ExpSeries operator-(ExpSeries a, const ExpSeries& b) { return a -= b; }
    friend ExpSeries operator*(const ExpSeries& a, const ExpSeries& b);
    ExpSeries operator-() const;

    /// i! * c[i]; throws std::logic_error unless it is an integer.
    mpz_class egf_coefficient(int i) const;

private:
    std::vector<mpq_class> c_;
};

/// The k x k determinant of I_{i-j+m[i=k]}(2t) - I_{i+j+m[i=k]}(2t), with
/// I_{-a} = I_a, truncated after t^order.
ExpSeries bessel_determinant(int order, int k, int m);

/// n! [t^n] of bessel_determinant(n, k, m). Requires k >= 1.
mpz_class bessel_count(int n, int k, int m);

mpz_class binomial(int n, int r);

}  // namespace ostab
