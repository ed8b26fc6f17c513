#include "ostab/knuth_growth.hpp"

#include <algorithm>
#include <cstdlib>

#include "ostab/error.hpp"

namespace ostab {

namespace {

std::string corner_name(int x, int y)
{
    return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

std::vector<int> prefix_starts(const std::vector<int>& sums)
{
    std::vector<int> start{0};
    for (int s : sums)
        start.push_back(start.back() + std::max(1, s));
    return start;
}

CellArrangement fine_arrangement(const CellArrangement& arr, const RefinedIndexMap& map)
{
    std::vector<int> h;
    for (int x = 0; x < arr.width(); ++x) {
        const auto xs = static_cast<std::size_t>(x);
        const int fh = map.row_start[static_cast<std::size_t>(arr.height(x))];
        for (int c = map.col_start[xs]; c < map.col_start[xs + 1]; ++c)
            h.push_back(fh);
    }
    return CellArrangement(std::move(h));
}

// Cells of lambda/mu as (row, col), in the order a standardized strip is
// added: by column for horizontal strips, by row for vertical strips.
std::vector<std::pair<int, int>> strip_cells(const Partition& mu, const Partition& lambda,
                                             ChainOrientation orient)
{
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = mu[r]; c < lambda[r]; ++c)
            cells.emplace_back(r, c);
    if (orient == ChainOrientation::north_east)
        std::sort(cells.begin(), cells.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
    return cells;  // row-major order already sorts by row
}

// Standardized chain from mu up to lambda, both ends included.
std::vector<Partition> standard_steps(const Partition& mu, const Partition& lambda,
                                      ChainOrientation orient)
{
    std::vector<Partition> out{mu};
    for (const auto& cell : strip_cells(mu, lambda, orient))
        out.push_back(out.back().add_cell(cell.first));
    return out;
}

bool strip_ok(const Partition& mu, const Partition& lambda, ChainOrientation orient)
{
    return orient == ChainOrientation::north_east ? is_horizontal_strip(mu, lambda)
                                                  : is_vertical_strip(mu, lambda);
}

}  // namespace

Refinement refine(const Filling& f, ChainOrientation orient)
{
    const CellArrangement& arr = f.arrangement();
    const int w = arr.width();
    const int h = arr.max_height();
    std::vector<int> col_sums(static_cast<std::size_t>(w));
    std::vector<int> row_sums(static_cast<std::size_t>(h));
    for (int x = 0; x < w; ++x)
        col_sums[static_cast<std::size_t>(x)] = f.column_sum(x);
    for (int y = 0; y < h; ++y)
        row_sums[static_cast<std::size_t>(y)] = f.row_sum(y);

    RefinedIndexMap map{prefix_starts(col_sums), prefix_starts(row_sums)};
    Filling fine(fine_arrangement(arr, map));
    const bool ne = orient == ChainOrientation::north_east;

    // first fine column of every cell
    std::vector<std::vector<int>> col0(static_cast<std::size_t>(w));
    for (int x = 0; x < w; ++x) {
        auto& c = col0[static_cast<std::size_t>(x)];
        c.assign(static_cast<std::size_t>(arr.height(x)), 0);
        int next = map.col_start[static_cast<std::size_t>(x)];
        for (int i = 0; i < arr.height(x); ++i) {
            const int y = ne ? i : arr.height(x) - 1 - i;
            c[static_cast<std::size_t>(y)] = next;
            next += f.at(x, y);
        }
    }
    for (int y = 0; y < h; ++y) {
        // NE: fine rows handed out bottom-up; SE: top-down
        int next = ne ? map.row_start[static_cast<std::size_t>(y)]
                      : map.row_start[static_cast<std::size_t>(y) + 1] - 1;
        for (int x = 0; x < w && arr.contains_cell(x, y); ++x) {
            const int e = f.at(x, y);
            const int c = col0[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            for (int i = 0; i < e; ++i)
                fine.set(c + i, ne ? next + i : next - i, 1);
            next += ne ? e : -e;
        }
    }
    return {std::move(fine), std::move(map)};
}

KnuthDiagram::KnuthDiagram(Filling coarse, ChainOrientation orient, RefinedIndexMap map,
                           GrowthDiagram fine)
    : coarse_(std::move(coarse))
    , orient_(orient)
    , map_(std::move(map))
    , fine_(std::move(fine))
{
}

const Partition& KnuthDiagram::label(int x, int y) const
{
    if (!arrangement().contains_corner(x, y))
        throw ValidationError("corner " + corner_name(x, y) + " is outside the arrangement");
    return fine_.label(map_.col_start[static_cast<std::size_t>(x)],
                       map_.row_start[static_cast<std::size_t>(y)]);
}

BoundaryWord KnuthDiagram::boundary() const
{
    BoundaryWord w;
    for (const auto& [x, y] : arrangement().boundary_corners())
        w.push_back(label(x, y));
    return w;
}

KnuthDiagram knuth_forward_sweep(const Filling& f, ChainOrientation orient)
{
    Refinement r = refine(f, orient);
    GrowthDiagram d = forward_sweep(r.fine);
    return KnuthDiagram(f, orient, std::move(r.map), std::move(d));
}

void validate_knuth_boundary(const CellArrangement& arr, const BoundaryWord& word,
                             ChainOrientation orient)
{
    const auto corners = arr.boundary_corners();
    if (word.size() != corners.size())
        throw ValidationError("boundary word has " + std::to_string(word.size()) +
                              " labels but the arrangement has " +
                              std::to_string(corners.size()) + " boundary corners");
    if (!word.front().empty() || !word.back().empty())
        throw ValidationError("boundary word must start and end with []");
    const auto edges = boundary_edges(arr);
    const char* strip = orient == ChainOrientation::north_east ? "horizontal" : "vertical";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const bool grow = edges[i] == EdgeKind::horizontal;
        const Partition& small = grow ? word[i] : word[i + 1];
        const Partition& big = grow ? word[i + 1] : word[i];
        if (!contains(small, big) || !strip_ok(small, big, orient))
            throw ValidationError(
                "boundary labels " + to_string(word[i]) + " at corner " +
                corner_name(corners[i].first, corners[i].second) + " and " +
                to_string(word[i + 1]) + " at corner " +
                corner_name(corners[i + 1].first, corners[i + 1].second) + " must " +
                (grow ? "grow" : "shrink") + " by a " + strip + " strip");
    }
}

Filling knuth_backward_sweep(const CellArrangement& arr, const BoundaryWord& word,
                             ChainOrientation orient)
{
    validate_knuth_boundary(arr, word, orient);
    const auto corners = arr.boundary_corners();
    const auto edges = boundary_edges(arr);

    // Line sums are the size jumps across the boundary edges.
    std::vector<int> col_sums(static_cast<std::size_t>(arr.width()));
    std::vector<int> row_sums(static_cast<std::size_t>(arr.max_height()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int jump = std::abs(word[i + 1].size() - word[i].size());
        if (edges[i] == EdgeKind::horizontal)
            col_sums[static_cast<std::size_t>(corners[i].first)] = jump;
        else
            row_sums[static_cast<std::size_t>(corners[i + 1].second)] = jump;
    }
    const RefinedIndexMap map{prefix_starts(col_sums), prefix_starts(row_sums)};
    const CellArrangement fine_arr = fine_arrangement(arr, map);

    BoundaryWord fine_word{word.front()};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (word[i] == word[i + 1]) {
            fine_word.push_back(word[i + 1]);
            continue;
        }
        if (edges[i] == EdgeKind::horizontal) {
            const auto steps = standard_steps(word[i], word[i + 1], orient);
            fine_word.insert(fine_word.end(), steps.begin() + 1, steps.end());
        } else {
            const auto steps = standard_steps(word[i + 1], word[i], orient);
            fine_word.insert(fine_word.end(), steps.rbegin() + 1, steps.rend());
        }
    }

    Filling fine;
    try {
        fine = backward_sweep(fine_arr, fine_word);
    } catch (const ReconstructionError& e) {
        throw ReconstructionError(std::string("refined grid: ") + e.what());
    }

    Filling coarse(arr);
    for (const auto& [fx, fy] : fine.support()) {
        const auto cx = std::upper_bound(map.col_start.begin(), map.col_start.end(), fx) -
                        map.col_start.begin() - 1;
        const auto cy = std::upper_bound(map.row_start.begin(), map.row_start.end(), fy) -
                        map.row_start.begin() - 1;
        const int x = static_cast<int>(cx);
        const int y = static_cast<int>(cy);
        coarse.set(x, y, coarse.at(x, y) + 1);
    }
    const Refinement check = refine(coarse, orient);
    if (check.map != map || check.fine != fine) {
        for (int x = 0; x < arr.width(); ++x)
            for (int y = 0; y < arr.height(x); ++y)
                for (int fx = map.col_start[static_cast<std::size_t>(x)];
                     fx < map.col_start[static_cast<std::size_t>(x) + 1]; ++fx)
                    for (int fy = map.row_start[static_cast<std::size_t>(y)];
                         fy < map.row_start[static_cast<std::size_t>(y) + 1]; ++fy)
                        if (check.fine.at(fx, fy) != fine.at(fx, fy))
                            throw ReconstructionError(
                                "the 1s reconstructed in cell " + corner_name(x, y) +
                                " are not arranged as a standardized chain");
        throw ReconstructionError("reconstructed refinement does not match its line sums");
    }
    return coarse;
}

}  // namespace ostab
