#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ostab/partition.hpp"
#include "ostab/tableau.hpp"

namespace ostab {

/// A left- and bottom-justified arrangement of cells given by its column
/// heights, left to right. Heights are weakly decreasing, so walking along the
/// top-right boundary only ever moves right or down. Zero-height columns are
/// allowed and contribute a horizontal boundary edge along the bottom.
///
/// Coordinates are Cartesian: cell (x, y) is column x from the left, row y from
/// the bottom; corner (x, y) is the lower-left corner of cell (x, y).
class CellArrangement {
public:
    CellArrangement() = default;
    explicit CellArrangement(std::vector<int> column_heights);

    static CellArrangement rectangle(int width, int height);
    static CellArrangement square(int n) { return rectangle(n, n); }
    /// Columns of heights n-1, n-2, ..., 0: the cells strictly below the
    /// anti-diagonal of the n x n square.
    static CellArrangement staircase(int n);

    const std::vector<int>& heights() const noexcept { return heights_; }
    int width() const noexcept { return static_cast<int>(heights_.size()); }
    int height(int x) const { return heights_.at(static_cast<std::size_t>(x)); }
    int max_height() const noexcept { return heights_.empty() ? 0 : heights_.front(); }
    bool is_rectangle() const noexcept;
    int num_cells() const noexcept;

    bool contains_cell(int x, int y) const noexcept;
    /// Highest corner in corner column x (0 <= x <= width()).
    int corner_height(int x) const noexcept;
    bool contains_corner(int x, int y) const noexcept;

    /// Corners along the top-right boundary from (0, max_height()) to
    /// (width(), 0).
    std::vector<std::pair<int, int>> boundary_corners() const;

    friend bool operator==(const CellArrangement&, const CellArrangement&) = default;

private:
    std::vector<int> heights_;
};

/// Non-negative integer entries on the cells of an arrangement.
class Filling {
public:
    Filling() = default;
    explicit Filling(CellArrangement arr);

    const CellArrangement& arrangement() const noexcept { return arr_; }
    int at(int x, int y) const;
    void set(int x, int y, int value);
    /// Sum of all entries.
    int total() const noexcept;
    int column_sum(int x) const;
    int row_sum(int y) const;

    /// Entries in {0,1} with at most one 1 in every row and column.
    bool is_standard_01() const noexcept;
    /// Throws ValidationError naming the offending cell.
    void check_standard_01() const;
    /// Cells holding a nonzero entry, ordered by x then y.
    std::vector<std::pair<int, int>> support() const;

    friend bool operator==(const Filling&, const Filling&) = default;

private:
    CellArrangement arr_;
    std::vector<std::vector<int>> cols_;
};

/// Partition labels read along the top-right boundary, in the order of
/// CellArrangement::boundary_corners().
using BoundaryWord = std::vector<Partition>;

enum class EdgeKind { horizontal, vertical };

/// Orientation of the edge between consecutive boundary corners.
std::vector<EdgeKind> boundary_edges(const CellArrangement& arr);

/// Checks the boundary-word conditions: starts and ends at the empty
/// partition, consecutive labels differ by at most one square, growing along
/// horizontal edges and shrinking along vertical ones. Throws ValidationError.
void validate_boundary(const CellArrangement& arr, const BoundaryWord& word);

enum class ForwardDirection { to_top_right, to_bottom_right };
enum class BackwardDirection { from_top_right, from_top_left };

/// Corner labelling of an arrangement produced by a sweep. Labels are stored
/// in the sweep's own frame, where the sweep always starts from empty labels
/// on the left and bottom boundaries; label() translates physical corner
/// coordinates into that frame. Mirrored directions require a rectangular
/// arrangement.
class GrowthDiagram {
public:
    GrowthDiagram(CellArrangement arr, Filling filling, bool flip_x, bool flip_y,
                  std::vector<std::vector<Partition>> labels);

    const CellArrangement& arrangement() const noexcept { return arr_; }
    /// The filling in physical coordinates.
    const Filling& filling() const noexcept { return filling_; }

    /// Label of physical corner (x, y).
    const Partition& label(int x, int y) const;
    /// Label of corner (x, y) in the sweep frame.
    const Partition& frame_label(int x, int y) const;
    /// Boundary word in the sweep frame.
    BoundaryWord boundary() const;

    bool flip_x() const noexcept { return flip_x_; }
    bool flip_y() const noexcept { return flip_y_; }

private:
    CellArrangement arr_;
    Filling filling_;
    bool flip_x_;
    bool flip_y_;
    std::vector<std::vector<Partition>> labels_;
};

/// Forward local rules. rho, mu, nu label the lower-left, lower-right and
/// upper-left corners of a cell; returns the upper-right label. Throws
/// MalformedCellError on labels that cannot surround a cell.
Partition forward_local(const Partition& rho, const Partition& mu, const Partition& nu,
                        bool cross);

struct BackwardLocal {
    Partition rho;
    bool cross = false;

    friend bool operator==(const BackwardLocal&, const BackwardLocal&) = default;
};

/// Backward local rules: recovers the lower-left label and the cell entry from
/// the upper-right (lambda), lower-right (mu) and upper-left (nu) labels.
BackwardLocal backward_local(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Forward growth sweep of a standard 0-1 filling. For to_top_right the
/// filling lives on `arr` directly. For to_bottom_right the sweep runs from the
/// top-left corner, i.e. the frame is reflected top to bottom (rectangles
/// only).
GrowthDiagram forward_sweep(const Filling& filling,
                            ForwardDirection dir = ForwardDirection::to_top_right);

/// Backward growth sweep: reconstructs the unique standard 0-1 filling whose
/// forward sweep has the given boundary word. For from_top_left the word is
/// read in the left-to-right reflected frame (rectangles only): along the top
/// edge from right to left, then down the left edge. The returned filling is
/// in physical coordinates. Throws ReconstructionError naming the failing cell.
Filling backward_sweep(const CellArrangement& arr, const BoundaryWord& word,
                       BackwardDirection dir = BackwardDirection::from_top_right);

/// Full diagram reconstructed by a backward sweep.
GrowthDiagram backward_diagram(const CellArrangement& arr, const BoundaryWord& word,
                               BackwardDirection dir = BackwardDirection::from_top_right);

struct GreeneRanks {
    int ne = 0;  ///< max size of a union of k NE-chains
    int se = 0;  ///< max size of a union of k SE-chains

    friend bool operator==(const GreeneRanks&, const GreeneRanks&) = default;
};

/// Largest filling support the brute-force Greene oracle accepts inside one
/// rectangle.
inline constexpr int kGreeneCapacity = 16;

/// Exhaustive oracle: maximal cardinality of a union of k NE-chains and of k
/// SE-chains among the 1s strictly left of and below corner (x, y). Throws
/// CapacityError if the rectangle holds more than kGreeneCapacity ones.
GreeneRanks greene_ranks_bruteforce(const Filling& filling, int x, int y, int k);

/// The same oracle for every k = 1..ones at once; entry k-1 holds rank k.
std::vector<GreeneRanks> greene_profile_bruteforce(const Filling& filling, int x, int y);

/// Robinson-Schensted through a growth diagram on the n x n square: the
/// permutation matrix has a 1 in column i-1, row perm[i-1]-1. P is read up the
/// right edge, Q along the top edge.
std::pair<Tableau, Tableau> rs_correspondence(const std::vector<int>& perm);

/// Filling text form: column heights on the first line, then one
/// "x y value" triple per nonzero cell.
std::string format_filling(const Filling& f);
Filling parse_filling(std::string_view text);
/// Parses a line of column heights.
CellArrangement parse_arrangement(std::string_view text);

/// "x y [label]" per corner, in physical coordinates, sorted by x then y.
std::string format_diagram(const GrowthDiagram& d);

}  // namespace ostab
