#include "ostab/growth.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "ostab/error.hpp"

namespace ostab {

namespace {

std::string corner_name(int x, int y)
{
    return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

// True if lambda/mu is empty or a single cell.
bool at_most_one_square(const Partition& mu, const Partition& lambda)
{
    return contains(mu, lambda) && lambda.size() - mu.size() <= 1;
}

// Maps cell and corner coordinates between the physical frame and the frame in
// which a sweep runs bottom-left to top-right.
struct Frame {
    int w = 0;
    int h = 0;
    bool flip_x = false;
    bool flip_y = false;

    std::pair<int, int> cell(int x, int y) const
    {
        return {flip_x ? w - 1 - x : x, flip_y ? h - 1 - y : y};
    }
    std::pair<int, int> corner(int x, int y) const
    {
        return {flip_x ? w - x : x, flip_y ? h - y : y};
    }
};

Frame make_frame(const CellArrangement& arr, bool flip_x, bool flip_y, const char* what)
{
    if ((flip_x || flip_y) && !arr.is_rectangle())
        throw PreconditionError(std::string(what) + ": mirrored sweeps need a rectangular arrangement");
    return {arr.width(), arr.max_height(), flip_x, flip_y};
}

using Labels = std::vector<std::vector<Partition>>;

Labels empty_labels(const CellArrangement& arr)
{
    Labels l(static_cast<std::size_t>(arr.width() + 1));
    for (int x = 0; x <= arr.width(); ++x)
        l[static_cast<std::size_t>(x)].resize(static_cast<std::size_t>(arr.corner_height(x) + 1));
    return l;
}

Partition& at(Labels& l, int x, int y)
{
    return l[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

GrowthDiagram sweep_forward(const Filling& f, const Frame& fr)
{
    f.check_standard_01();
    const CellArrangement& arr = f.arrangement();
    Labels l = empty_labels(arr);
    for (int x = 1; x <= arr.width(); ++x)
        for (int y = 1; y <= arr.corner_height(x); ++y) {
            const auto [px, py] = fr.cell(x - 1, y - 1);
            at(l, x, y) = forward_local(at(l, x - 1, y - 1), at(l, x, y - 1), at(l, x - 1, y),
                                        f.at(px, py) == 1);
        }
    return GrowthDiagram(arr, f, fr.flip_x, fr.flip_y, std::move(l));
}

GrowthDiagram sweep_backward(const CellArrangement& arr, const BoundaryWord& word, const Frame& fr)
{
    validate_boundary(arr, word);
    Labels l = empty_labels(arr);
    const auto corners = arr.boundary_corners();
    for (std::size_t i = 0; i < corners.size(); ++i)
        at(l, corners[i].first, corners[i].second) = word[i];

    Filling f(arr);
    for (int x = arr.width(); x >= 1; --x)
        for (int y = arr.corner_height(x); y >= 1; --y) {
            const auto [px, py] = fr.cell(x - 1, y - 1);
            BackwardLocal b;
            try {
                b = backward_local(at(l, x, y), at(l, x, y - 1), at(l, x - 1, y));
            } catch (const MalformedCellError& e) {
                throw ReconstructionError("cell " + corner_name(px, py) + ": " + e.what());
            }
            at(l, x - 1, y - 1) = std::move(b.rho);
            f.set(px, py, b.cross ? 1 : 0);
        }

    for (int x = 0; x <= arr.width(); ++x)
        for (int y = 0; y <= arr.corner_height(x); ++y)
            if ((x == 0 || y == 0) && !at(l, x, y).empty()) {
                const auto [px, py] = fr.corner(x, y);
                throw ReconstructionError("corner " + corner_name(px, py) +
                                          " on the start boundary got label " +
                                          to_string(at(l, x, y)) + " instead of []");
            }
    try {
        f.check_standard_01();
    } catch (const ValidationError& e) {
        throw ReconstructionError(e.what());
    }
    return GrowthDiagram(arr, std::move(f), fr.flip_x, fr.flip_y, std::move(l));
}

}  // namespace

// --- CellArrangement -------------------------------------------------------

CellArrangement::CellArrangement(std::vector<int> column_heights)
    : heights_(std::move(column_heights))
{
    for (std::size_t x = 0; x < heights_.size(); ++x) {
        if (heights_[x] < 0)
            throw ValidationError("column " + std::to_string(x) + " has negative height");
        if (x > 0 && heights_[x] > heights_[x - 1])
            throw ValidationError("column heights must weakly decrease; column " +
                                  std::to_string(x) + " is taller than column " +
                                  std::to_string(x - 1));
    }
}

CellArrangement CellArrangement::rectangle(int width, int height)
{
    if (width < 0 || height < 0)
        throw ValidationError("negative rectangle dimensions");
    return CellArrangement(std::vector<int>(static_cast<std::size_t>(width), height));
}

CellArrangement CellArrangement::staircase(int n)
{
    std::vector<int> h;
    for (int x = 0; x < n; ++x)
        h.push_back(n - 1 - x);
    return CellArrangement(std::move(h));
}

bool CellArrangement::is_rectangle() const noexcept
{
    return std::all_of(heights_.begin(), heights_.end(),
                       [&](int h) { return h == heights_.front(); });
}

int CellArrangement::num_cells() const noexcept
{
    int n = 0;
    for (int h : heights_)
        n += h;
    return n;
}

bool CellArrangement::contains_cell(int x, int y) const noexcept
{
    return x >= 0 && x < width() && y >= 0 && y < heights_[static_cast<std::size_t>(x)];
}

int CellArrangement::corner_height(int x) const noexcept
{
    if (heights_.empty())
        return 0;
    return heights_[static_cast<std::size_t>(std::max(x - 1, 0))];
}

bool CellArrangement::contains_corner(int x, int y) const noexcept
{
    return x >= 0 && x <= width() && y >= 0 && y <= corner_height(x);
}

std::vector<std::pair<int, int>> CellArrangement::boundary_corners() const
{
    std::vector<std::pair<int, int>> out{{0, max_height()}};
    for (int x = 0; x < width(); ++x) {
        const int h = heights_[static_cast<std::size_t>(x)];
        const int next = x + 1 < width() ? heights_[static_cast<std::size_t>(x + 1)] : 0;
        out.emplace_back(x + 1, h);
        for (int y = h - 1; y >= next; --y)
            out.emplace_back(x + 1, y);
    }
    return out;
}

// --- Filling ----------------------------------------------------------------

Filling::Filling(CellArrangement arr)
    : arr_(std::move(arr))
{
    for (int h : arr_.heights())
        cols_.emplace_back(static_cast<std::size_t>(h), 0);
}

int Filling::at(int x, int y) const
{
    if (!arr_.contains_cell(x, y))
        throw ValidationError("cell " + corner_name(x, y) + " is outside the arrangement");
    return cols_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

void Filling::set(int x, int y, int value)
{
    if (!arr_.contains_cell(x, y))
        throw ValidationError("cell " + corner_name(x, y) + " is outside the arrangement");
    if (value < 0)
        throw ValidationError("negative entry at cell " + corner_name(x, y));
    cols_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = value;
}

int Filling::total() const noexcept
{
    int s = 0;
    for (const auto& c : cols_)
        for (int v : c)
            s += v;
    return s;
}

int Filling::column_sum(int x) const
{
    int s = 0;
    for (int v : cols_.at(static_cast<std::size_t>(x)))
        s += v;
    return s;
}

int Filling::row_sum(int y) const
{
    int s = 0;
    for (const auto& c : cols_)
        if (y >= 0 && y < static_cast<int>(c.size()))
            s += c[static_cast<std::size_t>(y)];
    return s;
}

bool Filling::is_standard_01() const noexcept
{
    try {
        check_standard_01();
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

void Filling::check_standard_01() const
{
    std::vector<int> row_owner(static_cast<std::size_t>(arr_.max_height()), -1);
    for (int x = 0; x < arr_.width(); ++x) {
        int col_owner = -1;
        for (int y = 0; y < arr_.height(x); ++y) {
            const int v = cols_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (v == 0)
                continue;
            if (v != 1)
                throw ValidationError("entry " + std::to_string(v) + " at cell " +
                                      corner_name(x, y) + " in a 0-1 filling");
            if (col_owner >= 0)
                throw ValidationError("column " + std::to_string(x) + " has 1s at cells " +
                                      corner_name(x, col_owner) + " and " + corner_name(x, y));
            col_owner = y;
            int& r = row_owner[static_cast<std::size_t>(y)];
            if (r >= 0)
                throw ValidationError("row " + std::to_string(y) + " has 1s at cells " +
                                      corner_name(r, y) + " and " + corner_name(x, y));
            r = x;
        }
    }
}

std::vector<std::pair<int, int>> Filling::support() const
{
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < arr_.width(); ++x)
        for (int y = 0; y < arr_.height(x); ++y)
            if (cols_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 0)
                out.emplace_back(x, y);
    return out;
}

// --- boundary words ---------------------------------------------------------

std::vector<EdgeKind> boundary_edges(const CellArrangement& arr)
{
    const auto c = arr.boundary_corners();
    std::vector<EdgeKind> out;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        out.push_back(c[i].second == c[i + 1].second ? EdgeKind::horizontal : EdgeKind::vertical);
    return out;
}

void validate_boundary(const CellArrangement& arr, const BoundaryWord& word)
{
    const auto corners = arr.boundary_corners();
    if (word.size() != corners.size())
        throw ValidationError("boundary word has " + std::to_string(word.size()) +
                              " labels but the arrangement has " +
                              std::to_string(corners.size()) + " boundary corners");
    if (!word.front().empty() || !word.back().empty())
        throw ValidationError("boundary word must start and end with []");
    const auto edges = boundary_edges(arr);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const bool ok = edges[i] == EdgeKind::horizontal ? at_most_one_square(word[i], word[i + 1])
                                                         : at_most_one_square(word[i + 1], word[i]);
        if (!ok)
            throw ValidationError(
                "boundary labels " + to_string(word[i]) + " at corner " +
                corner_name(corners[i].first, corners[i].second) + " and " +
                to_string(word[i + 1]) + " at corner " +
                corner_name(corners[i + 1].first, corners[i + 1].second) + " must " +
                (edges[i] == EdgeKind::horizontal ? "grow" : "shrink") + " by at most one square");
    }
}

// --- GrowthDiagram ----------------------------------------------------------

GrowthDiagram::GrowthDiagram(CellArrangement arr, Filling filling, bool flip_x, bool flip_y,
                             std::vector<std::vector<Partition>> labels)
    : arr_(std::move(arr))
    , filling_(std::move(filling))
    , flip_x_(flip_x)
    , flip_y_(flip_y)
    , labels_(std::move(labels))
{
}

const Partition& GrowthDiagram::frame_label(int x, int y) const
{
    if (!arr_.contains_corner(x, y))
        throw ValidationError("corner " + corner_name(x, y) + " is outside the arrangement");
    return labels_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

const Partition& GrowthDiagram::label(int x, int y) const
{
    const Frame fr{arr_.width(), arr_.max_height(), flip_x_, flip_y_};
    const auto [fx, fy] = fr.corner(x, y);
    return frame_label(fx, fy);
}

BoundaryWord GrowthDiagram::boundary() const
{
    BoundaryWord w;
    for (const auto& [x, y] : arr_.boundary_corners())
        w.push_back(frame_label(x, y));
    return w;
}

// --- local rules ------------------------------------------------------------

Partition forward_local(const Partition& rho, const Partition& mu, const Partition& nu, bool cross)
{
    if (!at_most_one_square(rho, mu) || !at_most_one_square(rho, nu))
        throw MalformedCellError("forward rule: " + to_string(rho) + " must be contained in " +
                                 to_string(mu) + " and " + to_string(nu) +
                                 " with at most one square difference");
    if (cross) {
        if (rho != mu || rho != nu)
            throw MalformedCellError("forward rule: a 1 requires equal labels, got " +
                                     to_string(rho) + ", " + to_string(mu) + ", " + to_string(nu));
        return rho.add_cell(0);
    }
    if (rho == mu && rho == nu)
        return rho;
    if (rho == mu)
        return nu;
    if (rho == nu)
        return mu;
    if (mu != nu)
        return partition_union(mu, nu);
    // mu = nu, both one cell above rho in row r: bump into row r + 1
    return mu.add_cell(first_differing_row(rho, mu) + 1);
}

BackwardLocal backward_local(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (!at_most_one_square(mu, lambda) || !at_most_one_square(nu, lambda))
        throw MalformedCellError("backward rule: " + to_string(mu) + " and " + to_string(nu) +
                                 " must be contained in " + to_string(lambda) +
                                 " with at most one square difference");
    if (mu == lambda && nu == lambda)
        return {lambda, false};
    if (mu == lambda)
        return {nu, false};
    if (nu == lambda)
        return {mu, false};
    if (mu != nu)
        return {partition_intersection(mu, nu), false};
    const int k = first_differing_row(mu, lambda);
    if (k == 0)
        return {mu, true};  // the cell held a 1
    return {mu.remove_cell(k - 1), false};  // undo a bump from row k - 1
}

// --- sweeps -----------------------------------------------------------------

GrowthDiagram forward_sweep(const Filling& filling, ForwardDirection dir)
{
    return sweep_forward(filling, make_frame(filling.arrangement(), false,
                                             dir == ForwardDirection::to_bottom_right,
                                             "forward_sweep"));
}

GrowthDiagram backward_diagram(const CellArrangement& arr, const BoundaryWord& word,
                               BackwardDirection dir)
{
    return sweep_backward(
        arr, word,
        make_frame(arr, dir == BackwardDirection::from_top_left, false, "backward_sweep"));
}

Filling backward_sweep(const CellArrangement& arr, const BoundaryWord& word, BackwardDirection dir)
{
    return backward_diagram(arr, word, dir).filling();
}

// --- Greene oracle ----------------------------------------------------------

std::vector<GreeneRanks> greene_profile_bruteforce(const Filling& filling, int x, int y)
{
    filling.check_standard_01();
    std::vector<std::pair<int, int>> pts;
    for (const auto& p : filling.support())
        if (p.first < x && p.second < y)
            pts.push_back(p);
    const int n = static_cast<int>(pts.size());
    if (n > kGreeneCapacity)
        throw CapacityError("Greene oracle: " + std::to_string(n) + " ones below corner " +
                            corner_name(x, y) + " exceed the cap of " +
                            std::to_string(kGreeneCapacity));

    // Relative order of the y-coordinates, points sorted by x.
    std::vector<int> ys;
    for (const auto& p : pts)
        ys.push_back(p.second);
    thread_local std::map<std::vector<int>, std::vector<GreeneRanks>> cache;
    if (const auto it = cache.find(ys); it != cache.end())
        return it->second;

    // A set of 1s is a union of k NE-chains iff its longest SE-chain has
    // length <= k (Dilworth), and symmetrically.
    std::vector<int> best_by_se(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> best_by_ne(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> inc(static_cast<std::size_t>(n));
    std::vector<int> dec(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = 0;
        int longest_ne = 0;
        int longest_se = 0;
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1u))
                continue;
            ++size;
            int a = 1;
            int d = 1;
            for (int j = 0; j < i; ++j) {
                if (!(mask >> j & 1u))
                    continue;
                if (ys[static_cast<std::size_t>(j)] < ys[static_cast<std::size_t>(i)])
                    a = std::max(a, inc[static_cast<std::size_t>(j)] + 1);
                else
                    d = std::max(d, dec[static_cast<std::size_t>(j)] + 1);
            }
            inc[static_cast<std::size_t>(i)] = a;
            dec[static_cast<std::size_t>(i)] = d;
            longest_ne = std::max(longest_ne, a);
            longest_se = std::max(longest_se, d);
        }
        auto& bs = best_by_se[static_cast<std::size_t>(longest_se)];
        bs = std::max(bs, size);
        auto& bn = best_by_ne[static_cast<std::size_t>(longest_ne)];
        bn = std::max(bn, size);
    }
    std::vector<GreeneRanks> out;
    int ne = 0;
    int se = 0;
    for (int k = 1; k <= std::max(n, 1); ++k) {
        if (k <= n) {
            ne = std::max(ne, best_by_se[static_cast<std::size_t>(k)]);
            se = std::max(se, best_by_ne[static_cast<std::size_t>(k)]);
        }
        out.push_back({ne, se});
    }
    cache.emplace(std::move(ys), out);
    return out;
}

GreeneRanks greene_ranks_bruteforce(const Filling& filling, int x, int y, int k)
{
    if (k < 1)
        throw PreconditionError("Greene oracle: k must be positive");
    const auto profile = greene_profile_bruteforce(filling, x, y);
    return profile[static_cast<std::size_t>(std::min<int>(k, static_cast<int>(profile.size())) - 1)];
}

// --- Robinson-Schensted -----------------------------------------------------

std::pair<Tableau, Tableau> rs_correspondence(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    Filling f(CellArrangement::square(n));
    for (int i = 0; i < n; ++i) {
        const int v = perm[static_cast<std::size_t>(i)];
        if (v < 1 || v > n)
            throw ValidationError("not a permutation of 1.." + std::to_string(n));
        f.set(i, v - 1, 1);
    }
    try {
        f.check_standard_01();
    } catch (const ValidationError&) {
        throw ValidationError("not a permutation of 1.." + std::to_string(n));
    }
    const GrowthDiagram d = forward_sweep(f);
    PartitionChain p;
    PartitionChain q;
    for (int t = 0; t <= n; ++t) {
        p.push_back(d.label(n, t));
        q.push_back(d.label(t, n));
    }
    return {from_chain(p), from_chain(q)};
}

// --- text forms -------------------------------------------------------------

CellArrangement parse_arrangement(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<int> h;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            h.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw ValidationError("bad column height '" + tok + "'");
        }
    }
    return CellArrangement(std::move(h));
}

std::string format_filling(const Filling& f)
{
    std::ostringstream out;
    const auto& h = f.arrangement().heights();
    for (std::size_t i = 0; i < h.size(); ++i)
        out << (i ? " " : "") << h[i];
    out << '\n';
    for (const auto& [x, y] : f.support())
        out << x << ' ' << y << ' ' << f.at(x, y) << '\n';
    return out.str();
}

Filling parse_filling(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_arr = false;
    Filling f;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            if (!have_arr) {
                f = Filling(parse_arrangement(line));
                have_arr = true;
                continue;
            }
            std::istringstream ls(line);
            int x = 0;
            int y = 0;
            int v = 0;
            std::string extra;
            if (!(ls >> x >> y >> v) || (ls >> extra))
                throw ValidationError("expected 'x y value'");
            f.set(x, y, v);
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_arr)
        throw ValidationError("filling text has no arrangement line");
    return f;
}

std::string format_diagram(const GrowthDiagram& d)
{
    std::ostringstream out;
    const CellArrangement& arr = d.arrangement();
    const Frame fr{arr.width(), arr.max_height(), d.flip_x(), d.flip_y()};
    std::vector<std::pair<std::pair<int, int>, std::string>> rows;
    for (int x = 0; x <= arr.width(); ++x)
        for (int y = 0; y <= arr.corner_height(x); ++y)
            rows.push_back({fr.corner(x, y), to_string(d.frame_label(x, y))});
    std::sort(rows.begin(), rows.end());
    for (const auto& [c, s] : rows)
        out << c.first << ' ' << c.second << ' ' << s << '\n';
    return out.str();
}

}  // namespace ostab
