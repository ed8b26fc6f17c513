#include "ostab/bijections.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ostab/error.hpp"
#include "ostab/jeu_de_taquin.hpp"

namespace ostab {

namespace {

// Physical square filling whose left-right mirror image is `frame`.
Filling mirror_x(const Filling& frame)
{
    const int n = frame.arrangement().width();
    Filling out(frame.arrangement());
    for (const auto& [x, y] : frame.support())
        out.set(n - 1 - x, y, frame.at(x, y));
    return out;
}

// The square is labelled I, II, ..., 1, 2, ... bottom to top and right to
// left, so cell (c, r) pairs letter r with letter N-1-c. Symmetry of the
// labelled matrix is symmetry in the anti-diagonal.
void check_square(const Filling& s, int m, const char* what)
{
    const int n = s.arrangement().width();
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            const int v = s.at(c, r);
            if (v != s.at(n - 1 - r, n - 1 - c))
                throw std::logic_error(std::string(what) + ": square filling is not symmetric at (" +
                                       std::to_string(c) + ", " + std::to_string(r) + ")");
            if (v != 0 && c + r == n - 1)
                throw std::logic_error(std::string(what) + ": nonzero diagonal entry at (" +
                                       std::to_string(c) + ", " + std::to_string(r) + ")");
            if (v != 0 && r < m && c >= n - m)
                throw std::logic_error(std::string(what) +
                                       ": entry in the marker-by-marker block at (" +
                                       std::to_string(c) + ", " + std::to_string(r) + ")");
        }
}

// Lower-left half of the square, strictly below the anti-diagonal.
Filling lower_half(const Filling& s)
{
    const int n = s.arrangement().width();
    Filling out(CellArrangement::staircase(n));
    for (int c = 0; c < n; ++c)
        for (int r = 0; c + r <= n - 2; ++r)
            out.set(c, r, s.at(c, r));
    return out;
}

// Inverse of lower_half on symmetric fillings with zero diagonal.
Filling symmetrize(const Filling& half)
{
    const int n = half.arrangement().width();
    Filling out(CellArrangement::square(n));
    for (const auto& [c, r] : half.support()) {
        out.set(c, r, half.at(c, r));
        out.set(n - 1 - r, n - 1 - c, half.at(c, r));
    }
    return out;
}

// Square boundary word read in the left-right mirrored frame: the chain
// along the top from right to left, then back down the left edge.
BoundaryWord mirrored_square_word(const PartitionChain& chain)
{
    BoundaryWord w(chain.begin(), chain.end());
    w.insert(w.end(), chain.rbegin() + 1, chain.rend());
    return w;
}

// Steps 2 and 3 backwards: the chain of an augmented tableau from the
// symmetric square filling (given physically).
Tableau read_augmented(const Filling& square, int m, bool knuth)
{
    const int n = square.arrangement().width();
    const Filling frame = mirror_x(square);
    PartitionChain top;
    PartitionChain left;
    if (knuth) {
        const KnuthDiagram d = knuth_forward_sweep(frame, ChainOrientation::north_east);
        for (int t = 0; t <= n; ++t) {
            top.push_back(d.label(t, n));
            left.push_back(d.label(n, t));
        }
    } else {
        const GrowthDiagram d = forward_sweep(frame);
        for (int t = 0; t <= n; ++t) {
            top.push_back(d.frame_label(t, n));
            left.push_back(d.frame_label(n, t));
        }
    }
    if (top != left)
        throw std::logic_error("symmetric square produced different boundary chains");
    try {
        return from_chain(top, m);
    } catch (const ValidationError& e) {
        throw PreconditionError(std::string("square boundary is not a tableau chain: ") + e.what());
    }
}

void check_column_bound(const Tableau& t, int k)
{
    if (k < 0)
        throw PreconditionError("column bound k must be non-negative");
    const ColumnStats s = column_stats(t.shape());
    if (s.max_column_length > 2 * k)
        throw PreconditionError("tableau has a column of length " +
                                std::to_string(s.max_column_length) + " exceeding 2k = " +
                                std::to_string(2 * k));
}

}  // namespace

// --- oscillating tableaux ---------------------------------------------------

namespace {

int column_length(const Partition& p)
{
    return p.num_columns() <= 1 ? p.length() : -1;
}

int max_cols(const std::vector<Partition>& shapes)
{
    int k = 0;
    for (const auto& p : shapes)
        k = std::max(k, p.num_columns());
    return k;
}

}  // namespace

int OscillatingTableau::final_column_length() const noexcept
{
    return shapes.empty() ? -1 : column_length(shapes.back());
}

int OscillatingTableau::max_columns() const noexcept { return max_cols(shapes); }

int GeneralizedOscillatingTableau::final_column_length() const noexcept
{
    return shapes.empty() ? -1 : column_length(shapes.back());
}

int GeneralizedOscillatingTableau::max_columns() const noexcept { return max_cols(shapes); }

std::vector<int> GeneralizedOscillatingTableau::content() const
{
    const int n = length();
    std::vector<int> j(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (int i = 1; i <= n; ++i) {
        const auto s = [&](int idx) { return shapes[static_cast<std::size_t>(idx)].size(); };
        j[static_cast<std::size_t>(n - i)] = s(2 * i - 2) - 2 * s(2 * i - 1) + s(2 * i);
    }
    return j;
}

void validate_oscillating(const OscillatingTableau& o, int k)
{
    if (o.shapes.empty() || !o.shapes.front().empty())
        throw PreconditionError("an oscillating tableau starts at []");
    for (std::size_t i = 1; i < o.shapes.size(); ++i) {
        const Partition& a = o.shapes[i - 1];
        const Partition& b = o.shapes[i];
        if (strip_type(a, b) != StripType::one_square && strip_type(b, a) != StripType::one_square)
            throw PreconditionError("shapes " + std::to_string(i - 1) + " and " +
                                    std::to_string(i) + " (" + to_string(a) + ", " +
                                    to_string(b) + ") do not differ by one square");
    }
    if (o.final_column_length() < 0)
        throw PreconditionError("last shape " + to_string(o.shapes.back()) + " is not a column");
    if (k >= 0 && o.max_columns() > k)
        throw PreconditionError("a shape has more than k = " + std::to_string(k) + " columns");
}

void validate_generalized(const GeneralizedOscillatingTableau& o, int k)
{
    if (o.shapes.empty() || o.shapes.size() % 2 == 0)
        throw PreconditionError("a generalized oscillating tableau has an odd number of shapes");
    if (!o.shapes.front().empty())
        throw PreconditionError("a generalized oscillating tableau starts at []");
    for (std::size_t i = 1; i < o.shapes.size(); ++i) {
        const bool shrink = i % 2 == 1;
        const Partition& big = shrink ? o.shapes[i - 1] : o.shapes[i];
        const Partition& small = shrink ? o.shapes[i] : o.shapes[i - 1];
        if (!contains(small, big) || !is_vertical_strip(small, big))
            throw PreconditionError("shapes " + std::to_string(i - 1) + " and " +
                                    std::to_string(i) + " (" + to_string(o.shapes[i - 1]) + ", " +
                                    to_string(o.shapes[i]) + ") must " +
                                    (shrink ? "shrink" : "grow") + " by a vertical strip");
    }
    if (o.final_column_length() < 0)
        throw PreconditionError("last shape " + to_string(o.shapes.back()) + " is not a column");
    if (k >= 0 && o.max_columns() > k)
        throw PreconditionError("a shape has more than k = " + std::to_string(k) + " columns");
}

// --- standard tableaux <-> oscillating tableaux -------------------------------

OscillatingTrace syt_to_oscillating_traced(const Tableau& t, int k)
{
    validate_standard(t);
    check_column_bound(t, k);
    const int n = t.size();
    const int m = column_stats(t.shape()).num_odd_columns;
    const int big = n + m;

    OscillatingTrace tr;
    tr.augmented = inject_markers(t);
    const PartitionChain chain = to_chain(tr.augmented);

    tr.square = backward_sweep(CellArrangement::square(big), mirrored_square_word(chain),
                               BackwardDirection::from_top_left);
    check_square(tr.square, m, "syt_to_oscillating");
    // marker rows hold one SE-chain: going up, the 1s move left
    int prev_c = big;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < big; ++c)
            if (tr.square.at(c, r) == 1) {
                if (c >= prev_c)
                    throw std::logic_error("syt_to_oscillating: marker rows do not form one SE-chain");
                prev_c = c;
            }
    if (longest_ne_chain(tr.square) > 2 * k)
        throw std::logic_error("syt_to_oscillating: NE-chain longer than 2k");

    tr.staircase = lower_half(tr.square);
    const GrowthDiagram d = forward_sweep(tr.staircase);
    tr.diagonal.emplace_back();
    for (int i = 1; i < big; ++i)
        tr.diagonal.push_back(d.label(i, big - i));
    if (big > 0)
        tr.diagonal.emplace_back();

    for (int j = 0; j <= m; ++j)
        if (tr.diagonal[static_cast<std::size_t>(n + j)] != Partition::column(m - j))
            throw std::logic_error("syt_to_oscillating: diagonal tail is not (1^m), ..., []");
    tr.result.shapes.assign(tr.diagonal.begin(), tr.diagonal.begin() + n + 1);
    if (tr.result.max_columns() > k)
        throw std::logic_error("syt_to_oscillating: a diagonal shape exceeds k columns");
    return tr;
}

OscillatingTableau syt_to_oscillating(const Tableau& t, int k)
{
    return syt_to_oscillating_traced(t, k).result;
}

Tableau oscillating_to_syt(const OscillatingTableau& o)
{
    validate_oscillating(o);
    const int n = o.length();
    const int m = o.final_column_length();
    const int big = n + m;
    if (big == 0)
        return {};

    std::vector<Partition> diag = o.shapes;
    for (int j = 1; j <= m; ++j)
        diag.push_back(Partition::column(m - j));

    // Staircase boundary: inner corner (i, N-1-i) carries the smaller of its
    // two diagonal neighbours.
    BoundaryWord word;
    for (int i = 0; i < big; ++i) {
        const Partition& a = diag[static_cast<std::size_t>(i)];
        const Partition& b = diag[static_cast<std::size_t>(i) + 1];
        word.push_back(contains(a, b) ? a : b);
        word.push_back(b);
    }
    Filling half;
    try {
        half = backward_sweep(CellArrangement::staircase(big), word);
    } catch (const ReconstructionError& e) {
        throw PreconditionError(std::string("oscillating_to_syt: ") + e.what());
    }
    const Filling square = symmetrize(half);
    check_square(square, m, "oscillating_to_syt");
    const Tableau aug = read_augmented(square, m, false);
    return eject_markers(aug);
}

// --- semistandard tableaux <-> generalized oscillating tableaux ---------------

GeneralizedTrace ssyt_to_gen_oscillating_traced(const Tableau& t, int k, int n)
{
    validate_semistandard(t);
    if (t.num_markers() != 0)
        throw PreconditionError("ssyt_to_gen_oscillating: input contains markers");
    check_column_bound(t, k);
    n = std::max(n, t.max_numeral());
    const int m = column_stats(t.shape()).num_odd_columns;
    const int big = n + m;

    GeneralizedTrace tr;
    tr.augmented = inject_markers(t);
    const PartitionChain chain = to_chain(tr.augmented, n);

    const Filling frame = knuth_backward_sweep(CellArrangement::square(big),
                                               mirrored_square_word(chain),
                                               ChainOrientation::north_east);
    tr.square = mirror_x(frame);
    check_square(tr.square, m, "ssyt_to_gen_oscillating");

    tr.staircase = lower_half(tr.square);
    tr.boundary = knuth_forward_sweep(tr.staircase, ChainOrientation::south_east).boundary();

    // boundary[t] = λ^{t+1}; the tail past λ^{2n} is forced
    for (int i = n + 1; i <= big; ++i) {
        const Partition col = Partition::column(big - i);
        if (tr.boundary[static_cast<std::size_t>(2 * i - 2)] != col ||
            tr.boundary[static_cast<std::size_t>(2 * i - 1)] != col)
            throw std::logic_error("ssyt_to_gen_oscillating: boundary tail is not forced shape");
    }
    tr.result.shapes.emplace_back();
    tr.result.shapes.insert(tr.result.shapes.end(), tr.boundary.begin(),
                            tr.boundary.begin() + 2 * n);
    validate_generalized(tr.result, k);
    return tr;
}

GeneralizedOscillatingTableau ssyt_to_gen_oscillating(const Tableau& t, int k, int n)
{
    return ssyt_to_gen_oscillating_traced(t, k, n).result;
}

Tableau gen_oscillating_to_ssyt(const GeneralizedOscillatingTableau& o)
{
    validate_generalized(o);
    const int n = o.length();
    const int m = o.final_column_length();
    const int big = n + m;
    if (big == 0)
        return {};

    BoundaryWord word(o.shapes.begin() + 1, o.shapes.end());
    for (int i = n + 1; i <= big; ++i) {
        word.push_back(Partition::column(big - i));
        word.push_back(Partition::column(big - i));
    }
    Filling half;
    try {
        half = knuth_backward_sweep(CellArrangement::staircase(big), word,
                                    ChainOrientation::south_east);
    } catch (const ReconstructionError& e) {
        throw PreconditionError(std::string("gen_oscillating_to_ssyt: ") + e.what());
    }
    const Filling square = symmetrize(half);
    check_square(square, m, "gen_oscillating_to_ssyt");
    const Tableau aug = read_augmented(square, m, true);
    return eject_markers(aug);
}

// --- odd column bound ---------------------------------------------------------

OddBoundReduction odd_bound_reduce(const Tableau& t, int k)
{
    validate_standard(t);
    if (k >= 0 && column_stats(t.shape()).max_column_length > 2 * k + 1)
        throw PreconditionError("odd_bound_reduce: a column exceeds 2k+1 = " +
                                std::to_string(2 * k + 1));
    OddBoundReduction out{t, {}};
    for (;;) {
        const Partition conj = out.core.shape().conjugate();
        int c = conj.length() - 1;
        while (c >= 0 && conj[c] % 2 == 0)
            --c;
        if (c < 0)
            break;
        auto [rest, value] = inverse_rs_extract(out.core, Cell{conj[c] - 1, c});
        out.core = std::move(rest);
        out.marks.insert(value);
    }
    return out;
}

Tableau odd_bound_expand(const Tableau& core, const std::set<int>& marks, int k)
{
    validate_semistandard(core);
    const ColumnStats s = column_stats(core.shape());
    if (s.num_odd_columns != 0)
        throw PreconditionError("odd_bound_expand: core has odd columns");
    if (k >= 0 && s.max_column_length > 2 * k)
        throw PreconditionError("odd_bound_expand: core column exceeds 2k = " +
                                std::to_string(2 * k));
    const int n = core.size() + static_cast<int>(marks.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    auto claim = [&](int v) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw PreconditionError("odd_bound_expand: core entries and marks must partition 1.." +
                                    std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
    };
    for (const auto& row : core.rows())
        for (Letter l : row) {
            if (l.is_marker())
                throw PreconditionError("odd_bound_expand: core contains markers");
            claim(l.value());
        }
    for (int v : marks)
        claim(v);

    Tableau t = core;
    for (int v : marks)
        t = row_insert(t, Letter::numeral(v)).first;
    if (odd_bound_reduce(t) != OddBoundReduction{core, marks})
        throw PreconditionError("odd_bound_expand: (core, marks) is not in the image of the reduction");
    return t;
}

Tableau standardize(const Tableau& t)
{
    std::vector<Letter> values;
    for (const auto& row : t.rows())
        values.insert(values.end(), row.begin(), row.end());
    std::sort(values.begin(), values.end());
    std::vector<Tableau::Row> rows;
    for (const auto& row : t.rows()) {
        Tableau::Row r;
        for (Letter l : row)
            r.push_back(Letter::numeral(
                static_cast<int>(std::lower_bound(values.begin(), values.end(), l) -
                                 values.begin()) +
                1));
        rows.push_back(std::move(r));
    }
    return Tableau(std::move(rows));
}

// --- helpers ------------------------------------------------------------------

std::string format_shapes(const std::vector<Partition>& shapes)
{
    std::string out;
    for (const auto& p : shapes)
        out += to_string(p) + '\n';
    return out;
}

std::vector<Partition> parse_shapes(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<Partition> out;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(parse_partition(line));
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

int longest_ne_chain(const Filling& f)
{
    const auto pts = f.support();  // sorted by x, then y
    std::vector<int> best(pts.size(), 1);
    int out = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (pts[j].first < pts[i].first && pts[j].second < pts[i].second)
                best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

}  // namespace ostab
