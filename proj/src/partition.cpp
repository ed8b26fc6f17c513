#include "ostab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

#include "ostab/error.hpp"

namespace ostab {

namespace {

void check_canonical(const std::vector<int>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw ValidationError("partition parts must be positive (part " +
                                  std::to_string(i + 1) + " is " +
                                  std::to_string(parts[i]) + ")");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ValidationError("partition parts must be weakly decreasing (part " +
                                  std::to_string(i + 1) + ")");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts))
{
}

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    check_canonical(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::column(int m)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), 1));
}

Partition Partition::conjugate() const
{
    std::vector<int> conj(static_cast<std::size_t>(num_columns()), 0);
    for (int part : parts_)
        for (int c = 0; c < part; ++c)
            ++conj[static_cast<std::size_t>(c)];
    return Partition(std::move(conj));
}

Partition Partition::add_cell(int row) const
{
    if (row < 0 || row > length() || (row > 0 && (*this)[row - 1] <= (*this)[row]))
        throw PreconditionError("cannot add a cell in row " + std::to_string(row + 1) +
                                " of " + to_string(*this));
    std::vector<int> p = parts_;
    if (row == length())
        p.push_back(1);
    else
        ++p[static_cast<std::size_t>(row)];
    return Partition(std::move(p));
}

Partition Partition::remove_cell(int row) const
{
    if (row < 0 || row >= length() || (*this)[row] <= (*this)[row + 1])
        throw PreconditionError("cannot remove a cell from row " + std::to_string(row + 1) +
                                " of " + to_string(*this));
    std::vector<int> p = parts_;
    --p[static_cast<std::size_t>(row)];
    return Partition(std::move(p));
}

std::vector<std::pair<int, int>> Partition::corners() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < length(); ++i)
        if ((*this)[i] > (*this)[i + 1])
            out.emplace_back(i, (*this)[i] - 1);
    return out;
}

bool contains(const Partition& mu, const Partition& lambda)
{
    if (mu.length() > lambda.length())
        return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i])
            return false;
    return true;
}

Partition partition_union(const Partition& mu, const Partition& nu)
{
    const int len = std::max(mu.length(), nu.length());
    std::vector<int> p(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        p[static_cast<std::size_t>(i)] = std::max(mu[i], nu[i]);
    return Partition(std::move(p));
}

Partition partition_intersection(const Partition& mu, const Partition& nu)
{
    const int len = std::min(mu.length(), nu.length());
    std::vector<int> p(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        p[static_cast<std::size_t>(i)] = std::min(mu[i], nu[i]);
    return Partition(std::move(p));
}

bool is_horizontal_strip(const Partition& mu, const Partition& lambda)
{
    if (!contains(mu, lambda))
        return false;
    // interlacing: lambda_{i+1} <= mu_i
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i + 1] > mu[i])
            return false;
    return true;
}

bool is_vertical_strip(const Partition& mu, const Partition& lambda)
{
    if (!contains(mu, lambda))
        return false;
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i] - mu[i] > 1)
            return false;
    return true;
}

StripType strip_type(const Partition& mu, const Partition& lambda)
{
    if (!contains(mu, lambda))
        return StripType::not_contained;
    const int diff = lambda.size() - mu.size();
    if (diff == 0)
        return StripType::equal;
    if (diff == 1)
        return StripType::one_square;
    const bool h = is_horizontal_strip(mu, lambda);
    const bool v = is_vertical_strip(mu, lambda);
    if (h && v)
        return StripType::horizontal_and_vertical;
    if (h)
        return StripType::horizontal_strip;
    if (v)
        return StripType::vertical_strip;
    return StripType::other;
}

std::string_view to_string(StripType t)
{
    switch (t) {
    case StripType::equal: return "equal";
    case StripType::one_square: return "one_square";
    case StripType::horizontal_strip: return "horizontal_strip";
    case StripType::vertical_strip: return "vertical_strip";
    case StripType::horizontal_and_vertical: return "horizontal_and_vertical";
    case StripType::not_contained: return "not_contained";
    case StripType::other: return "other";
    }
    return "?";
}

int first_differing_row(const Partition& mu, const Partition& lambda)
{
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i)
        if (mu[i] != lambda[i])
            return i;
    return -1;
}

ColumnStats column_stats(const Partition& lambda)
{
    ColumnStats s;
    s.num_columns = lambda.num_columns();
    s.max_column_length = lambda.length();
    const Partition conj = lambda.conjugate();
    for (int c : conj.parts())
        s.num_odd_columns += c % 2;
    return s;
}

std::string to_string(const Partition& p)
{
    std::string s = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    s += ']';
    return s;
}

Partition parse_partition(std::string_view text)
{
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
            v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
            v.remove_suffix(1);
        return v;
    };
    std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ValidationError("expected a bracketed partition like [3,1,1], got '" +
                              std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
    std::vector<int> parts;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const std::string_view item = trim(body.substr(0, comma));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw ValidationError("bad partition part '" + std::string(item) + "' in '" +
                                  std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        body = body.substr(comma + 1);
        if (trim(body).empty())
            throw ValidationError("trailing comma in '" + std::string(text) + "'");
    }
    for (int v : parts)
        if (v == 0)
            throw ValidationError("zero part in '" + std::string(text) + "'");
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << to_string(p);
}

namespace {

void partitions_rec(int remaining, int max_part, int max_parts, std::vector<int>& cur,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_parts == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts, int max_part)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    partitions_rec(n, max_part < 0 ? n : max_part, max_parts < 0 ? n : max_parts, cur, out);
    return out;
}

}  // namespace ostab
