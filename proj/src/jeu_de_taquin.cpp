#include "ostab/jeu_de_taquin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ostab/error.hpp"

namespace ostab {

namespace {

using Grid = std::vector<Tableau::Row>;

bool numeral_at(const Grid& g, int r, int c)
{
    return r >= 0 && c >= 0 && r < static_cast<int>(g.size()) &&
           c < static_cast<int>(g[static_cast<std::size_t>(r)].size()) &&
           g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_numeral();
}

Letter& cell(Grid& g, int r, int c)
{
    return g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
}

std::string where(Cell c)
{
    return "(" + std::to_string(c.row + 1) + ", " + std::to_string(c.col + 1) + ")";
}

// Column of the vertical move from row r to r-1 along a path, i.e. the column
// in which the path leaves row r upwards. -1 if the path never does.
int vertical_column(const std::vector<Cell>& path, int r)
{
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i].row == r && path[i + 1].row == r - 1)
            return path[i].col;
    return -1;
}

// Leftmost and rightmost column of a path in row r; (-1, -1) if absent.
std::pair<int, int> row_span(const std::vector<Cell>& path, int r)
{
    int lo = -1;
    int hi = -1;
    for (const Cell& c : path)
        if (c.row == r) {
            lo = lo < 0 ? c.col : std::min(lo, c.col);
            hi = std::max(hi, c.col);
        }
    return {lo, hi};
}

void check_non_crossing(const std::vector<std::vector<Cell>>& paths)
{
    for (std::size_t p = 0; p + 1 < paths.size(); ++p) {
        const auto& left = paths[p];
        const auto& right = paths[p + 1];
        // Within a row a path occupies an interval [exit, entry]; weakly left
        // means both ends are weakly left.
        for (int r = right.front().row; r >= 0; --r) {
            const auto [ll, lr] = row_span(left, r);
            const auto [rl, rr] = row_span(right, r);
            if (rl < 0)
                continue;
            if (ll < 0 || ll > rl || lr > rr)
                throw std::logic_error("jeu de taquin paths " + to_roman(static_cast<int>(p + 1)) +
                                       " and " + to_roman(static_cast<int>(p + 2)) +
                                       " cross in row " + std::to_string(r + 1));
        }
        for (int r = right.front().row; r >= 1; --r) {
            const int cl = vertical_column(left, r);
            const int cr = vertical_column(right, r);
            if (cr >= 0 && !(cl >= 0 && cl < cr))
                throw std::logic_error("vertical pieces of jeu de taquin paths " +
                                       to_roman(static_cast<int>(p + 1)) + " and " +
                                       to_roman(static_cast<int>(p + 2)) +
                                       " are not strictly ordered between rows " +
                                       std::to_string(r) + " and " + std::to_string(r + 1));
        }
    }
}

}  // namespace

InjectionTrace inject_markers_traced(const Tableau& t, bool record_steps)
{
    validate_semistandard(t);
    if (t.num_markers() != 0)
        throw PreconditionError("inject_markers: input already contains markers");

    InjectionTrace trace;
    Grid g = t.rows();
    const Partition conj = t.shape().conjugate();

    // feet of the odd columns, left to right
    std::vector<Cell> feet;
    for (int c = 0; c < conj.length(); ++c)
        if (conj[c] % 2 == 1)
            feet.push_back({conj[c], c});
    for (std::size_t p = 0; p < feet.size(); ++p) {
        const Cell f = feet[p];
        if (f.row == static_cast<int>(g.size()))
            g.emplace_back();
        auto& row = g[static_cast<std::size_t>(f.row)];
        if (static_cast<int>(row.size()) != f.col)
            throw std::logic_error("inject_markers: foot cell is not addable");
        row.push_back(Letter::marker(static_cast<int>(p + 1)));
    }

    for (std::size_t p = 0; p < feet.size(); ++p) {
        Cell pos = feet[p];
        std::vector<Cell> path{pos};
        for (;;) {
            const bool up = numeral_at(g, pos.row - 1, pos.col);
            const bool left = numeral_at(g, pos.row, pos.col - 1);
            if (!up && !left)
                break;
            Cell next;
            if (up && left)
                next = cell(g, pos.row - 1, pos.col) >= cell(g, pos.row, pos.col - 1)
                           ? Cell{pos.row - 1, pos.col}
                           : Cell{pos.row, pos.col - 1};
            else
                next = up ? Cell{pos.row - 1, pos.col} : Cell{pos.row, pos.col - 1};
            std::swap(cell(g, pos.row, pos.col), cell(g, next.row, next.col));
            pos = next;
            path.push_back(pos);
            if (record_steps)
                trace.steps.emplace_back(g);
        }
        if (pos.row != 0 || pos.col != static_cast<int>(p))
            throw std::logic_error("inject_markers: marker " + to_roman(static_cast<int>(p + 1)) +
                                   " came to rest at " + where(pos) + " instead of the first row");
        trace.paths.push_back(std::move(path));
    }
    check_non_crossing(trace.paths);
    trace.result = Tableau(std::move(g));
    return trace;
}

Tableau inject_markers(const Tableau& t)
{
    return inject_markers_traced(t).result;
}

Tableau eject_markers(const Tableau& t)
{
    validate_semistandard(t);
    const int m = t.num_markers();
    Grid g = t.rows();
    for (int p = 1; p <= m; ++p)
        if (!t.has_cell(0, p - 1) || t.at(0, p - 1) != Letter::marker(p))
            throw PreconditionError("eject_markers: marker " + to_roman(p) +
                                    " is not in cell (1, " + std::to_string(p) + ")");

    for (int p = m; p >= 1; --p) {
        Cell pos{0, p - 1};
        for (;;) {
            const bool down = numeral_at(g, pos.row + 1, pos.col);
            const bool right = numeral_at(g, pos.row, pos.col + 1);
            if (!down && !right)
                break;
            Cell next;
            if (down && right)
                next = cell(g, pos.row + 1, pos.col) <= cell(g, pos.row, pos.col + 1)
                           ? Cell{pos.row + 1, pos.col}
                           : Cell{pos.row, pos.col + 1};
            else
                next = down ? Cell{pos.row + 1, pos.col} : Cell{pos.row, pos.col + 1};
            std::swap(cell(g, pos.row, pos.col), cell(g, next.row, next.col));
            pos = next;
        }
        auto& row = g[static_cast<std::size_t>(pos.row)];
        const bool below = pos.row + 1 < static_cast<int>(g.size()) &&
                           static_cast<int>(g[static_cast<std::size_t>(pos.row + 1)].size()) > pos.col;
        if (pos.col + 1 != static_cast<int>(row.size()) || below)
            throw std::logic_error("eject_markers: marker stopped outside an outer corner");
        row.pop_back();
        if (row.empty())
            g.erase(g.begin() + pos.row);
    }
    Tableau out(std::move(g));
    if (column_stats(out.shape()).num_odd_columns != m)
        throw PreconditionError("eject_markers: result has " +
                                std::to_string(column_stats(out.shape()).num_odd_columns) +
                                " odd columns but " + std::to_string(m) + " markers were removed");
    return out;
}

std::pair<Tableau, Cell> row_insert(const Tableau& t, Letter value)
{
    Grid g = t.rows();
    Letter x = value;
    for (int r = 0;; ++r) {
        if (r == static_cast<int>(g.size())) {
            g.push_back({x});
            return {Tableau(std::move(g)), Cell{r, 0}};
        }
        auto& row = g[static_cast<std::size_t>(r)];
        const auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return {Tableau(std::move(g)), Cell{r, static_cast<int>(row.size()) - 1}};
        }
        std::swap(*it, x);
    }
}

std::pair<Tableau, int> inverse_rs_extract(const Tableau& t, Cell corner)
{
    const Partition shape = t.shape();
    const auto corners = shape.corners();
    if (std::find(corners.begin(), corners.end(), std::make_pair(corner.row, corner.col)) ==
        corners.end())
        throw PreconditionError("inverse_rs_extract: " + where(corner) + " is not an outer corner");
    Grid g = t.rows();
    auto& last = g[static_cast<std::size_t>(corner.row)];
    Letter x = last.back();
    last.pop_back();
    if (last.empty())
        g.pop_back();
    for (int r = corner.row - 1; r >= 0; --r) {
        auto& row = g[static_cast<std::size_t>(r)];
        // rightmost entry strictly smaller than x
        auto it = std::lower_bound(row.begin(), row.end(), x);
        if (it == row.begin())
            throw std::logic_error("inverse_rs_extract: input is not a tableau");
        --it;
        std::swap(*it, x);
    }
    return {Tableau(std::move(g)), x.value()};
}

std::pair<Tableau, Tableau> rs_insertion(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1)
            throw ValidationError("not a permutation of 1.." + std::to_string(n));
    std::vector<std::vector<int>> matrix(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] = 1;
    return rsk_insertion(matrix);
}

std::pair<Tableau, Tableau> rsk_insertion(const std::vector<std::vector<int>>& matrix)
{
    Tableau p;
    Grid q;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix[i].size(); ++j) {
            if (matrix[i][j] < 0)
                throw ValidationError("rsk_insertion: negative matrix entry");
            for (int rep = 0; rep < matrix[i][j]; ++rep) {
                auto [next, pos] = row_insert(p, Letter::numeral(static_cast<int>(j + 1)));
                p = std::move(next);
                if (pos.row == static_cast<int>(q.size()))
                    q.emplace_back();
                q[static_cast<std::size_t>(pos.row)].push_back(
                    Letter::numeral(static_cast<int>(i + 1)));
            }
        }
    return {std::move(p), Tableau(std::move(q))};
}

}  // namespace ostab
