#pragma once

#include <vector>

#include "ostab/growth.hpp"

namespace ostab {

/// How the e ones that replace an entry e sit inside their coarse cell, and
/// how cells sharing a coarse line are ordered against each other.
///
/// north_east: within a coarse column lower cells take lefter fine columns,
/// within a coarse row lefter cells take lower fine rows, and the ones of a
/// cell form a NE-chain. Boundary steps are horizontal strips (RSK).
///
/// south_east: within a coarse column higher cells take lefter fine columns,
/// within a coarse row lefter cells take higher fine rows, and the ones of a
/// cell form a SE-chain. Boundary steps are vertical strips (dual RSK).
enum class ChainOrientation { north_east, south_east };

/// Coarse grid line i expands to the fine lines [start[i], start[i+1]).
/// Coarse corner (x, y) corresponds to fine corner (col_start[x], row_start[y]).
struct RefinedIndexMap {
    std::vector<int> col_start;  ///< size width + 1
    std::vector<int> row_start;  ///< size max_height + 1

    friend bool operator==(const RefinedIndexMap&, const RefinedIndexMap&) = default;
};

struct Refinement {
    Filling fine;  ///< standard 0-1 filling of the refined arrangement
    RefinedIndexMap map;
};

/// Splits every coarse line into max(1, line sum) fine lines and replaces each
/// entry e by e ones, placed per `orient`.
Refinement refine(const Filling& f, ChainOrientation orient);

/// Result of a Knuth-type forward sweep: the 0-1 diagram on the refined grid
/// plus read-back at coarse corners.
class KnuthDiagram {
public:
    KnuthDiagram(Filling coarse, ChainOrientation orient, RefinedIndexMap map, GrowthDiagram fine);

    const Filling& filling() const noexcept { return coarse_; }
    const CellArrangement& arrangement() const noexcept { return coarse_.arrangement(); }
    ChainOrientation orientation() const noexcept { return orient_; }
    const RefinedIndexMap& map() const noexcept { return map_; }
    const GrowthDiagram& fine() const noexcept { return fine_; }

    /// Label of coarse corner (x, y).
    const Partition& label(int x, int y) const;
    /// Labels of every corner on the top-right boundary, inner corners
    /// included, in CellArrangement::boundary_corners() order.
    BoundaryWord boundary() const;

private:
    Filling coarse_;
    ChainOrientation orient_;
    RefinedIndexMap map_;
    GrowthDiagram fine_;
};

/// Forward sweep toward the top-right of a non-negative integer filling.
KnuthDiagram knuth_forward_sweep(const Filling& f, ChainOrientation orient);

/// Checks a coarse boundary word: starts and ends empty, grows along
/// horizontal edges and shrinks along vertical ones by horizontal strips
/// (north_east) or vertical strips (south_east). Throws ValidationError.
void validate_knuth_boundary(const CellArrangement& arr, const BoundaryWord& word,
                             ChainOrientation orient);

/// Inverse of knuth_forward_sweep: the unique non-negative integer filling of
/// `arr` whose forward sweep has the given coarse boundary word. Throws
/// ReconstructionError if no filling fits.
Filling knuth_backward_sweep(const CellArrangement& arr, const BoundaryWord& word,
                             ChainOrientation orient);

}  // namespace ostab
