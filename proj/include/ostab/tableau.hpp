#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ostab/partition.hpp"

namespace ostab {

/// A tableau entry over the alphabet I < II < III < ... < 1 < 2 < ...
/// Markers (the Roman-numeral letters) are a separate kind that sorts before
/// every numeral.
class Letter {
public:
    enum class Kind : std::uint8_t { marker, numeral };

    constexpr Letter() = default;
    static constexpr Letter marker(int index) { return Letter(Kind::marker, index); }
    static constexpr Letter numeral(int value) { return Letter(Kind::numeral, value); }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_marker() const noexcept { return kind_ == Kind::marker; }
    constexpr bool is_numeral() const noexcept { return kind_ == Kind::numeral; }
    /// Marker index (1 for I) or numeral value.
    constexpr int value() const noexcept { return value_; }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr std::strong_ordering operator<=>(Letter a, Letter b)
    {
        if (a.kind_ != b.kind_)
            return a.kind_ == Kind::marker ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
        return a.value_ <=> b.value_;
    }

private:
    constexpr Letter(Kind k, int v) : kind_(k), value_(v) {}

    Kind kind_ = Kind::numeral;
    int value_ = 0;
};

std::string to_string(Letter l);
/// Parses "I", "II", ... (markers) or a positive decimal numeral.
Letter parse_letter(std::string_view token);

std::string to_roman(int value);
/// Returns 0 when `text` is not a canonical Roman numeral.
int from_roman(std::string_view text);

using PartitionChain = std::vector<Partition>;

/// Row-wise filling of a Ferrers shape. The same type carries standard,
/// semistandard and marker-augmented tableaux; the validators below decide
/// which flavour a value is.
class Tableau {
public:
    using Row = std::vector<Letter>;

    Tableau() = default;
    explicit Tableau(std::vector<Row> rows);
    /// Numeral-only convenience constructor.
    static Tableau from_numbers(const std::vector<std::vector<int>>& rows);

    const std::vector<Row>& rows() const noexcept { return rows_; }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    /// Number of cells.
    int size() const noexcept;
    bool empty() const noexcept { return rows_.empty(); }
    Partition shape() const;

    /// 0-based access.
    Letter at(int row, int col) const { return rows_.at(row).at(col); }
    Letter& at(int row, int col) { return rows_.at(row).at(col); }
    bool has_cell(int row, int col) const noexcept;

    int num_markers() const noexcept;
    /// Largest numeral, 0 if none.
    int max_numeral() const noexcept;
    /// content[i-1] = number of entries equal to numeral i, for i = 1..n.
    std::vector<int> content(int n) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<Row> rows_;
};

/// Rows weakly increase, columns strictly increase, row lengths weakly
/// decrease, numerals positive, markers I..m each at most once. Throws
/// ValidationError with 1-based (row, column) of the first violation.
void validate_semistandard(const Tableau& t);

/// Semistandard, no markers, numerals exactly 1..n.
void validate_standard(const Tableau& t);

bool is_semistandard(const Tableau& t);
bool is_standard(const Tableau& t);

/// lambda^i = shape of the entries <= the i-th letter of the alphabet
/// I..(m) 1..n, where m = num_markers() and n = max(max_numeral(), max_letter).
/// The chain has m + n + 1 entries and starts at the empty partition.
PartitionChain to_chain(const Tableau& t, int max_letter = 0);

/// Inverse of to_chain. The first `num_markers` steps are filled with the
/// markers I, II, ...; the remaining ones with 1, 2, .... Every step must be
/// a horizontal strip (one_square steps give standard tableaux).
Tableau from_chain(const PartitionChain& chain, int num_markers = 0);

/// True iff every column has length <= max_col_len and exactly
/// required_odd_cols columns have odd length.
bool validate_bounds(const Tableau& t, int max_col_len, int required_odd_cols);

/// One row per line, entries separated by single spaces, newline-terminated.
/// The empty tableau formats as the empty string.
std::string format_tableau(const Tableau& t);
/// Parses the line format; blank lines and '#' comments are skipped.
Tableau parse_tableau(std::string_view text);

}  // namespace ostab
