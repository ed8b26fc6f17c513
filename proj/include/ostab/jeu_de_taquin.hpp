#pragma once

#include <utility>
#include <vector>

#include "ostab/tableau.hpp"

namespace ostab {

/// 0-based cell position inside a tableau (row from the top, column from the
/// left).
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Result of marker injection together with the slide path of every marker
/// (path[p-1] is the sequence of cells occupied by marker p, foot first).
struct InjectionTrace {
    Tableau result;
    std::vector<std::vector<Cell>> paths;
    /// Tableau snapshot after every individual swap, if requested.
    std::vector<Tableau> steps;
};

/// Puts markers I, II, ... below the odd-length columns (left to right) and
/// slides them, in that order, to the first row by reverse jeu de taquin:
/// the marker trades places with the larger of its upper and left numeral
/// neighbours, the upper one winning ties. Works for standard and
/// semistandard input; the input must not contain markers.
Tableau inject_markers(const Tableau& t);

/// Same as inject_markers, also returning the slide paths. The non-crossing
/// property of successive paths is checked on every call and a violation
/// raises std::logic_error.
InjectionTrace inject_markers_traced(const Tableau& t, bool record_steps = false);

/// Inverse of inject_markers. Markers must occupy the start of the first row
/// in order. The highest marker is slid out first: it trades places with the
/// smaller of its lower and right numeral neighbours (lower wins ties) until
/// it reaches an outer corner, where it is deleted. Throws PreconditionError
/// if the markers are misplaced or the result does not have exactly as many
/// odd columns as there were markers.
Tableau eject_markers(const Tableau& t);

/// Schensted row insertion of `value` (bumps the leftmost strictly larger
/// entry). Returns the tableau and the new cell.
std::pair<Tableau, Cell> row_insert(const Tableau& t, Letter value);

/// Reverse row insertion starting at the outer corner `corner`: the corner
/// entry moves up, replacing in each row the rightmost entry strictly smaller
/// than it. Returns the shrunken tableau and the entry pushed out of the first
/// row. Throws PreconditionError if `corner` is not an outer corner.
std::pair<Tableau, int> inverse_rs_extract(const Tableau& t, Cell corner);

/// Classical Robinson-Schensted: perm[i] is the image of i+1. P is the
/// insertion tableau, Q the recording tableau.
std::pair<Tableau, Tableau> rs_insertion(const std::vector<int>& perm);

/// Classical RSK of a non-negative integer matrix; matrix[i][j] is the
/// multiplicity of the biletter (i+1 over j+1). Bottom letters are inserted
/// into P, top letters recorded in Q.
std::pair<Tableau, Tableau> rsk_insertion(const std::vector<std::vector<int>>& matrix);

}  // namespace ostab
