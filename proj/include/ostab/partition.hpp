#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ostab {

/// An integer partition stored as its nonzero parts in weakly decreasing
/// order. Parts beyond length() read as zero, so two partitions compare equal
/// exactly when their Ferrers diagrams coincide.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// The one-column shape (1^m).
    static Partition column(int m);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return size_; }

    /// i-th part, 0-based; zero past the end.
    int operator[](int i) const noexcept
    {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    int num_columns() const noexcept { return empty() ? 0 : parts_.front(); }

    Partition conjugate() const;

    /// Copy with one cell added at the end of row `row` (0-based). Throws
    /// PreconditionError if the result is not a partition.
    Partition add_cell(int row) const;
    /// Copy with the last cell of row `row` removed.
    Partition remove_cell(int row) const;

    /// Outer corners as 0-based (row, column) pairs, top to bottom.
    std::vector<std::pair<int, int>> corners() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// mu ⊆ lambda as Ferrers diagrams.
bool contains(const Partition& mu, const Partition& lambda);

/// Componentwise maximum (union of diagrams).
Partition partition_union(const Partition& mu, const Partition& nu);

/// Componentwise minimum (intersection of diagrams).
Partition partition_intersection(const Partition& mu, const Partition& nu);

enum class StripType {
    equal,
    one_square,
    horizontal_strip,
    vertical_strip,
    horizontal_and_vertical,
    not_contained,
    other,
};

std::string_view to_string(StripType t);

/// Classifies the skew diagram lambda/mu. A single added cell is reported as
/// one_square; larger strips that are both horizontal and vertical get their
/// own label.
StripType strip_type(const Partition& mu, const Partition& lambda);

/// lambda/mu has at most one cell per column (equality included).
bool is_horizontal_strip(const Partition& mu, const Partition& lambda);
/// lambda/mu has at most one cell per row (equality included).
bool is_vertical_strip(const Partition& mu, const Partition& lambda);

/// 0-based index of the first row where mu and lambda differ, or -1.
int first_differing_row(const Partition& mu, const Partition& lambda);

struct ColumnStats {
    int num_columns = 0;
    int max_column_length = 0;
    int num_odd_columns = 0;

    friend bool operator==(const ColumnStats&, const ColumnStats&) = default;
};

ColumnStats column_stats(const Partition& lambda);

/// Bracket text form: "[3,1,1]", empty partition "[]".
std::string to_string(const Partition& p);
/// Parses the bracket form; whitespace is tolerated. Throws ValidationError.
Partition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n, in reverse lexicographic order, optionally with at
/// most max_parts parts and parts at most max_part (negative = unbounded).
std::vector<Partition> partitions_of(int n, int max_parts = -1, int max_part = -1);

}  // namespace ostab
