#include "ostab/tableau.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "ostab/error.hpp"

namespace ostab {

namespace {

std::string cell_name(int row, int col)
{
    return "(" + std::to_string(row + 1) + ", " + std::to_string(col + 1) + ")";
}

}  // namespace

std::string to_roman(int value)
{
    static constexpr std::array<std::pair<int, const char*>, 13> table{{
        {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"},
        {50, "L"},   {40, "XL"},  {10, "X"},  {9, "IX"},   {5, "V"},   {4, "IV"},
        {1, "I"},
    }};
    std::string out;
    for (const auto& [v, s] : table)
        while (value >= v) {
            out += s;
            value -= v;
        }
    return out;
}

int from_roman(std::string_view text)
{
    if (text.empty() || text.size() > 15)
        return 0;
    auto digit = [](char c) {
        switch (c) {
        case 'I': return 1;
        case 'V': return 5;
        case 'X': return 10;
        case 'L': return 50;
        case 'C': return 100;
        case 'D': return 500;
        case 'M': return 1000;
        default: return 0;
        }
    };
    int total = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int d = digit(text[i]);
        if (d == 0)
            return 0;
        const int next = i + 1 < text.size() ? digit(text[i + 1]) : 0;
        total += d < next ? -d : d;
    }
    // reject non-canonical spellings such as "IIII" or "IC"
    return total > 0 && to_roman(total) == text ? total : 0;
}

std::string to_string(Letter l)
{
    return l.is_marker() ? to_roman(l.value()) : std::to_string(l.value());
}

Letter parse_letter(std::string_view token)
{
    if (!token.empty() && token.front() >= '0' && token.front() <= '9') {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size() || v <= 0)
            throw ValidationError("bad tableau entry '" + std::string(token) + "'");
        return Letter::numeral(v);
    }
    const int r = from_roman(token);
    if (r == 0)
        throw ValidationError("bad tableau entry '" + std::string(token) + "'");
    return Letter::marker(r);
}

Tableau::Tableau(std::vector<Row> rows)
    : rows_(std::move(rows))
{
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].empty())
            throw ValidationError("empty row " + std::to_string(r + 1) + " inside tableau");
}

Tableau Tableau::from_numbers(const std::vector<std::vector<int>>& rows)
{
    std::vector<Row> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        Row r;
        r.reserve(row.size());
        for (int v : row)
            r.push_back(Letter::numeral(v));
        out.push_back(std::move(r));
    }
    return Tableau(std::move(out));
}

int Tableau::size() const noexcept
{
    int n = 0;
    for (const auto& r : rows_)
        n += static_cast<int>(r.size());
    return n;
}

Partition Tableau::shape() const
{
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_)
        p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
}

bool Tableau::has_cell(int row, int col) const noexcept
{
    return row >= 0 && col >= 0 && row < num_rows() &&
           col < static_cast<int>(rows_[static_cast<std::size_t>(row)].size());
}

int Tableau::num_markers() const noexcept
{
    int m = 0;
    for (const auto& r : rows_)
        m += static_cast<int>(std::count_if(r.begin(), r.end(),
                                            [](Letter l) { return l.is_marker(); }));
    return m;
}

int Tableau::max_numeral() const noexcept
{
    int n = 0;
    for (const auto& r : rows_)
        for (Letter l : r)
            if (l.is_numeral())
                n = std::max(n, l.value());
    return n;
}

std::vector<int> Tableau::content(int n) const
{
    std::vector<int> c(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (const auto& r : rows_)
        for (Letter l : r)
            if (l.is_numeral() && l.value() <= n)
                ++c[static_cast<std::size_t>(l.value() - 1)];
    return c;
}

void validate_semistandard(const Tableau& t)
{
    const auto& rows = t.rows();
    std::vector<int> marker_seen;
    for (int r = 0; r < t.num_rows(); ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (r > 0 && row.size() > rows[static_cast<std::size_t>(r - 1)].size())
            throw ValidationError("row " + std::to_string(r + 1) +
                                  " is longer than the row above it");
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            const Letter l = row[static_cast<std::size_t>(c)];
            if (l.value() <= 0)
                throw ValidationError("non-positive entry at " + cell_name(r, c));
            if (l.is_marker()) {
                if (std::find(marker_seen.begin(), marker_seen.end(), l.value()) !=
                    marker_seen.end())
                    throw ValidationError("marker " + to_string(l) + " repeated at " +
                                          cell_name(r, c));
                marker_seen.push_back(l.value());
            }
            if (c > 0 && row[static_cast<std::size_t>(c - 1)] > l)
                throw ValidationError("row decreases at " + cell_name(r, c));
            if (r > 0 && !(t.at(r - 1, c) < l))
                throw ValidationError("column not strictly increasing at " + cell_name(r, c));
        }
    }
    std::sort(marker_seen.begin(), marker_seen.end());
    for (std::size_t i = 0; i < marker_seen.size(); ++i)
        if (marker_seen[i] != static_cast<int>(i + 1))
            throw ValidationError("markers must be I.." + to_roman(static_cast<int>(
                                                              marker_seen.size())) +
                                  " without gaps");
}

void validate_standard(const Tableau& t)
{
    validate_semistandard(t);
    const int n = t.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int r = 0; r < t.num_rows(); ++r)
        for (int c = 0; c < static_cast<int>(t.rows()[static_cast<std::size_t>(r)].size()); ++c) {
            const Letter l = t.at(r, c);
            if (l.is_marker())
                throw ValidationError("marker in a standard tableau at " + cell_name(r, c));
            if (l.value() > n || seen[static_cast<std::size_t>(l.value())])
                throw ValidationError("entries of a standard tableau must be 1.." +
                                      std::to_string(n) + " each once; offending entry at " +
                                      cell_name(r, c));
            seen[static_cast<std::size_t>(l.value())] = true;
        }
}

bool is_semistandard(const Tableau& t)
{
    try {
        validate_semistandard(t);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

bool is_standard(const Tableau& t)
{
    try {
        validate_standard(t);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

PartitionChain to_chain(const Tableau& t, int max_letter)
{
    validate_semistandard(t);
    const int m = t.num_markers();
    const int n = std::max(t.max_numeral(), max_letter);
    PartitionChain chain;
    chain.reserve(static_cast<std::size_t>(m + n + 1));
    chain.emplace_back();
    for (int i = 1; i <= m + n; ++i) {
        const Letter bound = i <= m ? Letter::marker(i) : Letter::numeral(i - m);
        std::vector<int> parts;
        for (const auto& row : t.rows()) {
            const auto cnt = std::upper_bound(row.begin(), row.end(), bound) - row.begin();
            if (cnt == 0)
                break;
            parts.push_back(static_cast<int>(cnt));
        }
        chain.emplace_back(std::move(parts));
    }
    return chain;
}

Tableau from_chain(const PartitionChain& chain, int num_markers)
{
    if (chain.empty() || !chain.front().empty())
        throw ValidationError("a tableau chain must start at the empty partition");
    if (num_markers < 0 || num_markers > static_cast<int>(chain.size()) - 1)
        throw ValidationError("chain too short for " + std::to_string(num_markers) + " markers");
    std::vector<Tableau::Row> rows;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const Partition& prev = chain[i - 1];
        const Partition& cur = chain[i];
        const bool marker_step = static_cast<int>(i) <= num_markers;
        if (!is_horizontal_strip(prev, cur))
            throw ValidationError("chain step " + std::to_string(i) + " from " + to_string(prev) +
                                  " to " + to_string(cur) + " is not a horizontal strip");
        if (marker_step && cur.size() != prev.size() + 1)
            throw ValidationError("chain step " + std::to_string(i) +
                                  " carries a marker and must add exactly one cell");
        const Letter letter = marker_step ? Letter::marker(static_cast<int>(i))
                                          : Letter::numeral(static_cast<int>(i) - num_markers);
        rows.resize(static_cast<std::size_t>(cur.length()));
        for (int r = 0; r < cur.length(); ++r)
            for (int c = prev[r]; c < cur[r]; ++c)
                rows[static_cast<std::size_t>(r)].push_back(letter);
    }
    return Tableau(std::move(rows));
}

bool validate_bounds(const Tableau& t, int max_col_len, int required_odd_cols)
{
    const ColumnStats s = column_stats(t.shape());
    return s.max_column_length <= max_col_len && s.num_odd_columns == required_odd_cols;
}

std::string format_tableau(const Tableau& t)
{
    std::string out;
    for (const auto& row : t.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ' ';
            out += to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

Tableau parse_tableau(std::string_view text)
{
    std::vector<Tableau::Row> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        Tableau::Row row;
        std::string tok;
        while (ls >> tok) {
            try {
                row.push_back(parse_letter(tok));
            } catch (const ValidationError& e) {
                throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    Tableau t(std::move(rows));
    validate_semistandard(t);
    return t;
}

}  // namespace ostab
