#include "ostab/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

#include "ostab/error.hpp"

namespace ostab {

namespace {

// Shapes one square away from p with at most k columns.
std::vector<Partition> neighbours(const Partition& p, int k)
{
    std::vector<Partition> out;
    for (int r = 0; r < p.length(); ++r)
        if (p[r] > p[r + 1])
            out.push_back(p.remove_cell(r));
    for (int r = 0; r <= p.length(); ++r)
        if ((r == 0 || p[r - 1] > p[r]) && p[r] < k)
            out.push_back(p.add_cell(r));
    return out;
}

// Cells of the symmetric difference between p and the column (1^m).
int distance_to_column(const Partition& p, int m)
{
    int d = 0;
    for (int r = 0; r < std::max(p.length(), m); ++r)
        d += std::abs(p[r] - (r < m ? 1 : 0));
    return d;
}

// Shapes nu ⊇ mu with nu/mu a vertical strip of the given size and at most
// k columns.
void add_vertical_strips(const Partition& mu, int size, int k, std::vector<Partition>& out)
{
    std::vector<int> parts = mu.parts();
    parts.resize(static_cast<std::size_t>(mu.length() + size), 0);
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (left == 0) {
            out.emplace_back(std::vector<int>(parts));
            return;
        }
        if (row >= static_cast<int>(parts.size()))
            return;
        const auto r = static_cast<std::size_t>(row);
        // leave the row as is (then no later row may grow past it)
        rec(row + 1, left);
        const bool fits = parts[r] + 1 <= k && (row == 0 || parts[r - 1] >= parts[r] + 1);
        if (fits) {
            ++parts[r];
            rec(row + 1, left - 1);
            --parts[r];
        }
    };
    rec(0, size);
}

// Shapes mu ⊆ lambda with lambda/mu a vertical strip, with strip size.
std::vector<std::pair<Partition, int>> remove_vertical_strips(const Partition& lambda)
{
    std::vector<std::pair<Partition, int>> out;
    std::vector<int> parts = lambda.parts();
    // bottom row first, so the row below is already final
    std::function<void(int, int)> rec = [&](int row, int removed) {
        if (row < 0) {
            out.emplace_back(Partition(std::vector<int>(parts)), removed);
            return;
        }
        const auto r = static_cast<std::size_t>(row);
        rec(row - 1, removed);
        const int below = row + 1 < lambda.length() ? parts[r + 1] : 0;
        if (parts[r] - 1 >= below) {
            --parts[r];
            rec(row - 1, removed + 1);
            ++parts[r];
        }
    };
    rec(lambda.length() - 1, 0);
    return out;
}

// Shapes nu ⊇ mu with nu/mu a horizontal strip of the given size, at most
// max_rows rows.
void add_horizontal_strips(const Partition& mu, int size, int max_rows, std::vector<Partition>& out)
{
    const int rows = std::min(mu.length() + 1, max_rows);
    std::vector<int> parts(static_cast<std::size_t>(std::max(rows, 0)), 0);
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (row == rows) {
            if (left == 0)
                out.emplace_back(std::vector<int>(parts));
            return;
        }
        const int lo = mu[row];
        const int hi = row == 0 ? mu[0] + left : std::min(mu[row - 1], mu[row] + left);
        for (int v = lo; v <= hi; ++v) {
            parts[static_cast<std::size_t>(row)] = v;
            rec(row + 1, left - (v - lo));
        }
    };
    if (rows <= 0) {
        if (size == 0)
            out.push_back(mu);
        return;
    }
    rec(0, size);
}

}  // namespace

// --- oscillating tableaux -----------------------------------------------------

mpz_class count_oscillating(int n, int k, int m)
{
    if (n < 0 || k < 0 || m < 0)
        return 0;
    std::map<Partition, mpz_class> cur{{Partition{}, 1}};
    for (int step = 0; step < n; ++step) {
        std::map<Partition, mpz_class> next;
        const int left = n - step - 1;
        for (const auto& [p, c] : cur)
            for (Partition q : neighbours(p, k))
                if (distance_to_column(q, m) <= left)
                    next[std::move(q)] += c;
        cur = std::move(next);
    }
    const auto it = cur.find(Partition::column(m));
    return it == cur.end() ? mpz_class(0) : it->second;
}

std::vector<OscillatingTableau> enumerate_oscillating(int n, int k, int m)
{
    std::vector<OscillatingTableau> out;
    if (n < 0 || k < 0 || m < 0)
        return out;
    std::vector<Partition> path{Partition{}};
    const Partition target = Partition::column(m);
    std::function<void()> rec = [&]() {
        const int done = static_cast<int>(path.size()) - 1;
        if (done == n) {
            if (path.back() == target)
                out.push_back({path});
            return;
        }
        for (Partition q : neighbours(path.back(), k)) {
            if (distance_to_column(q, m) > n - done - 1)
                continue;
            path.push_back(std::move(q));
            rec();
            path.pop_back();
        }
    };
    rec();
    return out;
}

// --- standard tableaux --------------------------------------------------------

mpz_class num_syt(const Partition& shape)
{
    thread_local std::map<Partition, mpz_class> memo;
    if (shape.size() <= 1)
        return 1;
    if (const auto it = memo.find(shape); it != memo.end())
        return it->second;
    mpz_class total = 0;
    for (const auto& corner : shape.corners())
        total += num_syt(shape.remove_cell(corner.first));
    memo.emplace(shape, total);
    return total;
}

mpz_class num_syt_hook(const Partition& shape)
{
    const Partition conj = shape.conjugate();
    mpz_class num = 1;
    for (int i = 2; i <= shape.size(); ++i)
        num *= i;
    mpz_class den = 1;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c)
            den *= (shape[r] - c - 1) + (conj[c] - r - 1) + 1;
    return num / den;
}

mpz_class count_syt(int n, int max_col_len, int odd_cols)
{
    if (n < 0 || max_col_len < 0)
        return 0;
    mpz_class total = 0;
    for (const Partition& p : partitions_of(n, max_col_len))
        if (column_stats(p).num_odd_columns == odd_cols)
            total += num_syt(p);
    return total;
}

std::vector<Tableau> enumerate_syt(int n, int max_col_len, int odd_cols)
{
    std::vector<Tableau> out;
    if (n < 0 || max_col_len < 0)
        return out;
    PartitionChain chain{Partition{}};
    std::function<void()> rec = [&]() {
        const Partition p = chain.back();
        if (p.size() == n) {
            if (column_stats(p).num_odd_columns == odd_cols)
                out.push_back(from_chain(chain));
            return;
        }
        for (int r = 0; r <= p.length() && r < max_col_len; ++r)
            if (r == 0 || p[r - 1] > p[r]) {
                chain.push_back(p.add_cell(r));
                rec();
                chain.pop_back();
            }
    };
    rec();
    return out;
}

// --- generalized oscillating tableaux -----------------------------------------

mpz_class count_gen_oscillating(const std::vector<int>& j, int k, int m)
{
    if (k < 0 || m < 0 || std::any_of(j.begin(), j.end(), [](int v) { return v < 0; }))
        return 0;
    const int n = static_cast<int>(j.size());
    std::map<Partition, mpz_class> cur{{Partition{}, 1}};
    for (int i = 1; i <= n; ++i) {
        const int ji = j[static_cast<std::size_t>(n - i)];
        std::map<Partition, mpz_class> next;
        for (const auto& [lambda, c] : cur)
            for (const auto& [mu, r] : remove_vertical_strips(lambda)) {
                if (ji - r < 0)
                    continue;
                std::vector<Partition> nus;
                add_vertical_strips(mu, ji - r, k, nus);
                for (Partition& nu : nus)
                    next[std::move(nu)] += c;
            }
        cur = std::move(next);
    }
    const auto it = cur.find(Partition::column(m));
    return it == cur.end() ? mpz_class(0) : it->second;
}

std::vector<GeneralizedOscillatingTableau> enumerate_gen_oscillating(const std::vector<int>& j,
                                                                     int k, int m)
{
    std::vector<GeneralizedOscillatingTableau> out;
    if (k < 0 || m < 0 || std::any_of(j.begin(), j.end(), [](int v) { return v < 0; }))
        return out;
    const int n = static_cast<int>(j.size());
    std::vector<Partition> path{Partition{}};
    const Partition target = Partition::column(m);
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            if (path.back() == target)
                out.push_back({path});
            return;
        }
        const int ji = j[static_cast<std::size_t>(n - i)];
        const Partition lambda = path.back();
        for (const auto& [mu, r] : remove_vertical_strips(lambda)) {
            if (ji - r < 0)
                continue;
            std::vector<Partition> nus;
            add_vertical_strips(mu, ji - r, k, nus);
            for (Partition& nu : nus) {
                path.push_back(mu);
                path.push_back(std::move(nu));
                rec(i + 1);
                path.pop_back();
                path.pop_back();
            }
        }
    };
    rec(1);
    return out;
}

// --- semistandard tableaux ----------------------------------------------------

mpz_class count_ssyt(const std::vector<int>& j, int max_col_len, int odd_cols)
{
    if (max_col_len < 0 || std::any_of(j.begin(), j.end(), [](int v) { return v < 0; }))
        return 0;
    std::map<Partition, mpz_class> cur{{Partition{}, 1}};
    for (int ji : j) {
        std::map<Partition, mpz_class> next;
        for (const auto& [mu, c] : cur) {
            std::vector<Partition> nus;
            add_horizontal_strips(mu, ji, max_col_len, nus);
            for (Partition& nu : nus)
                next[std::move(nu)] += c;
        }
        cur = std::move(next);
    }
    mpz_class total = 0;
    for (const auto& [p, c] : cur)
        if (column_stats(p).num_odd_columns == odd_cols)
            total += c;
    return total;
}

std::vector<Tableau> enumerate_ssyt(const std::vector<int>& j, int max_col_len, int odd_cols)
{
    std::vector<Tableau> out;
    if (max_col_len < 0 || std::any_of(j.begin(), j.end(), [](int v) { return v < 0; }))
        return out;
    PartitionChain chain{Partition{}};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == j.size()) {
            if (column_stats(chain.back()).num_odd_columns == odd_cols)
                out.push_back(from_chain(chain));
            return;
        }
        std::vector<Partition> nus;
        add_horizontal_strips(chain.back(), j[i], max_col_len, nus);
        for (Partition& nu : nus) {
            chain.push_back(std::move(nu));
            rec(i + 1);
            chain.pop_back();
        }
    };
    rec(0);
    return out;
}

// --- series -------------------------------------------------------------------

ExpSeries::ExpSeries(int order)
    : c_(static_cast<std::size_t>(std::max(order, 0)) + 1)
{
}

ExpSeries ExpSeries::constant(int order, const mpq_class& c)
{
    ExpSeries s(order);
    s.c_[0] = c;
    return s;
}

ExpSeries ExpSeries::bessel_i(int order, int alpha)
{
    alpha = std::abs(alpha);
    ExpSeries s(order);
    mpz_class lf = 1;  // l!
    mpz_class laf = 1;  // (l + alpha)!
    for (int i = 2; i <= alpha; ++i)
        laf *= i;
    for (int l = 0; 2 * l + alpha <= order; ++l) {
        if (l > 0) {
            lf *= l;
            laf *= l + alpha;
        }
        s.c_[static_cast<std::size_t>(2 * l + alpha)] = mpq_class(1, 1) / mpq_class(lf * laf);
    }
    return s;
}

ExpSeries& ExpSeries::operator+=(const ExpSeries& o)
{
    for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

ExpSeries& ExpSeries::operator-=(const ExpSeries& o)
{
    for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

ExpSeries ExpSeries::operator-() const
{
    ExpSeries s(order());
    for (std::size_t i = 0; i < c_.size(); ++i)
        s.c_[i] = -c_[i];
    return s;
}

ExpSeries operator*(const ExpSeries& a, const ExpSeries& b)
{
    const int order = std::min(a.order(), b.order());
    ExpSeries s(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= order; ++j)
            if (b[j] != 0)
                s[i + j] += a[i] * b[j];
    }
    return s;
}

mpz_class ExpSeries::egf_coefficient(int i) const
{
    mpq_class v = (*this)[i];
    for (int f = 2; f <= i; ++f)
        v *= f;
    v.canonicalize();
    if (v.get_den() != 1)
        throw std::logic_error("coefficient " + std::to_string(i) + " times " + std::to_string(i) +
                               "! is not an integer");
    return v.get_num();
}

ExpSeries bessel_determinant(int order, int k, int m)
{
    if (k < 0)
        throw PreconditionError("bessel_determinant: k must be non-negative");
    if (k > 20)
        throw CapacityError("bessel_determinant: k > 20 is not supported");
    // entry(i, j), 1-based
    std::vector<ExpSeries> entries;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const int shift = i == k ? m : 0;
            entries.push_back(ExpSeries::bessel_i(order, i - j + shift) -
                              ExpSeries::bessel_i(order, i + j + shift));
        }
    // Laplace expansion along successive rows, memoized on the set of columns
    // still available.
    std::map<std::uint32_t, ExpSeries> memo;
    std::function<ExpSeries(std::uint32_t)> det = [&](std::uint32_t cols) -> ExpSeries {
        const int row = k - std::popcount(cols);
        if (row == k)
            return ExpSeries::constant(order, 1);
        if (const auto it = memo.find(cols); it != memo.end())
            return it->second;
        ExpSeries total(order);
        int sign = 1;
        for (int j = 0; j < k; ++j) {
            if (!(cols >> j & 1u))
                continue;
            const ExpSeries& e = entries[static_cast<std::size_t>(row * k + j)];
            bool zero = true;
            for (int t = 0; t <= order && zero; ++t)
                zero = e[t] == 0;
            if (!zero) {
                ExpSeries term = e * det(cols & ~(1u << j));
                if (sign > 0)
                    total += term;
                else
                    total -= term;
            }
            sign = -sign;
        }
        memo.emplace(cols, total);
        return total;
    };
    return det((1u << k) - 1u);
}

mpz_class bessel_count(int n, int k, int m)
{
    if (n < 0 || m < 0)
        return 0;
    if (k < 1)
        throw PreconditionError("bessel_count: k must be at least 1");
    return bessel_determinant(n, k, m).egf_coefficient(n);
}

mpz_class binomial(int n, int r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

}  // namespace ostab
