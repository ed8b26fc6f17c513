#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ostab/bijections.hpp"
#include "ostab/counting.hpp"
#include "ostab/error.hpp"
#include "ostab/growth.hpp"
#include "ostab/jeu_de_taquin.hpp"
#include "ostab/knuth_growth.hpp"
#include "ostab/verify.hpp"

namespace ostab::cli {

namespace {

using nlohmann::json;

// Verification mismatch detected by a subcommand.
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& fallback)
{
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << fallback.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f)
        throw ValidationError("cannot open '" + path + "'");
    buf << f.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text)
{
    const auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (text[p] == '{' || text[p] == '[') && json::accept(text);
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad JSON input: ") + e.what());
    }
}

json partition_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw ValidationError("a partition must be a JSON array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ValidationError("a partition must be a JSON array of integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

json shapes_json(const std::vector<Partition>& shapes)
{
    json a = json::array();
    for (const auto& p : shapes)
        a.push_back(partition_json(p));
    return json{{"shapes", a}};
}

std::vector<Partition> read_shapes(const std::string& text)
{
    if (!looks_like_json(text))
        return parse_shapes(text);
    json j = parse_json(text);
    if (j.is_object())
        j = j.value("shapes", json());
    if (!j.is_array())
        throw ValidationError("expected a JSON array of partitions or {\"shapes\": [...]}");
    std::vector<Partition> out;
    for (const auto& p : j)
        out.push_back(partition_from_json(p));
    return out;
}

json tableau_json(const Tableau& t)
{
    json rows = json::array();
    for (const auto& row : t.rows()) {
        json r = json::array();
        for (Letter l : row) {
            if (l.is_marker())
                r.push_back(to_string(l));
            else
                r.push_back(l.value());
        }
        rows.push_back(r);
    }
    return json{{"tableau", rows}};
}

Tableau read_tableau(const std::string& text)
{
    if (!looks_like_json(text))
        return parse_tableau(text);
    json j = parse_json(text);
    if (j.is_object())
        j = j.value("tableau", json());
    if (!j.is_array())
        throw ValidationError("expected a JSON array of rows or {\"tableau\": [...]}");
    std::vector<Tableau::Row> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw ValidationError("tableau rows must be JSON arrays");
        Tableau::Row row;
        for (const auto& v : r) {
            if (v.is_number_integer())
                row.push_back(parse_letter(std::to_string(v.get<int>())));
            else if (v.is_string())
                row.push_back(parse_letter(v.get<std::string>()));
            else
                throw ValidationError("tableau entries must be integers or Roman numerals");
        }
        rows.push_back(std::move(row));
    }
    Tableau t(std::move(rows));
    validate_semistandard(t);
    return t;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::string s = text;
    for (char& c : s)
        if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']')
            c = ' ';
    std::istringstream in(s);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw ValidationError("bad integer '" + tok + "'");
        }
    }
    return out;
}

json filling_json(const Filling& f)
{
    json cells = json::array();
    for (const auto& [x, y] : f.support())
        cells.push_back({x, y, f.at(x, y)});
    return json{{"heights", f.arrangement().heights()}, {"cells", cells}};
}

Filling read_filling(const std::string& text)
{
    if (!looks_like_json(text))
        return parse_filling(text);
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("heights"))
        throw ValidationError("expected {\"heights\": [...], \"cells\": [[x, y, v], ...]}");
    Filling f(CellArrangement(j.at("heights").get<std::vector<int>>()));
    for (const auto& c : j.value("cells", json::array())) {
        if (!c.is_array() || c.size() != 3)
            throw ValidationError("filling cells must be [x, y, value] triples");
        f.set(c[0].get<int>(), c[1].get<int>(), c[2].get<int>());
    }
    return f;
}

CellArrangement read_arrangement(const std::string& text)
{
    if (!looks_like_json(text)) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return parse_arrangement(line);
        }
        return CellArrangement();
    }
    json j = parse_json(text);
    if (j.is_object())
        j = j.value("heights", json());
    return CellArrangement(j.get<std::vector<int>>());
}

json diagram_json(const GrowthDiagram& d)
{
    json corners = json::array();
    std::istringstream in(format_diagram(d));
    int x = 0;
    int y = 0;
    std::string label;
    while (in >> x >> y >> label)
        corners.push_back({{"x", x}, {"y", y}, {"label", partition_json(parse_partition(label))}});
    json out = filling_json(d.filling());
    out["corners"] = corners;
    return out;
}

std::string join(const std::set<int>& s)
{
    std::string out;
    for (int v : s)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

struct Options {
    std::string in_path;
    bool as_json = false;
    int k = -1;
    int n = 0;
    int m = 0;
    std::string method = "both";
    std::string side = "osc";
    std::string content;
    std::string suite = "all";
    int max_n = 6;
    std::uint64_t seed = kDefaultSeed;
    int cases = 200;
    int threads = 0;
    bool table = false;
    std::string perm;
    std::string arr_path;
    std::string fill_path;
    std::string boundary_path;
    std::string direction;
    std::string knuth;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Oscillating tableaux, growth diagrams and the bijections between them"};
    app.require_subcommand(1);
    Options o;

    auto add_in = [&](CLI::App* c) {
        c->add_option("--in", o.in_path, "input file (default: stdin)");
        c->add_flag("--json", o.as_json, "write JSON instead of the line format");
    };

    auto* map = app.add_subcommand("map", "run one of the bijections");
    map->require_subcommand(1);
    auto* syt2osc = map->add_subcommand("syt2osc", "standard tableau -> oscillating tableau");
    auto* osc2syt = map->add_subcommand("osc2syt", "oscillating tableau -> standard tableau");
    auto* ssyt2osc =
        map->add_subcommand("ssyt2osc", "semistandard tableau -> generalized oscillating tableau");
    auto* osc2ssyt =
        map->add_subcommand("osc2ssyt", "generalized oscillating tableau -> semistandard tableau");
    for (auto* c : {syt2osc, osc2syt, ssyt2osc, osc2ssyt})
        add_in(c);
    syt2osc->add_option("--k", o.k, "column bound: columns of length <= 2k")->required();
    ssyt2osc->add_option("--k", o.k, "column bound: columns of length <= 2k")->required();
    ssyt2osc->add_option("--n", o.n, "largest entry (default: largest entry present)");
    osc2syt->add_option("--k", o.k, "optional check: shapes have at most k columns");
    osc2ssyt->add_option("--k", o.k, "optional check: shapes have at most k columns");

    auto* reduce = app.add_subcommand("reduce", "odd column bound reduction");
    reduce->require_subcommand(1);
    auto* reduce_odd = reduce->add_subcommand("odd-bound", "tableau -> marks and even-column core");
    auto* expand = app.add_subcommand("expand", "inverse of reduce");
    expand->require_subcommand(1);
    auto* expand_odd = expand->add_subcommand("odd-bound", "marks and core -> tableau");
    for (auto* c : {reduce_odd, expand_odd}) {
        add_in(c);
        c->add_option("--k", o.k, "column bound 2k+1 of the full tableau");
    }

    auto* rs = app.add_subcommand("rs", "Robinson-Schensted via growth diagrams");
    rs->add_option("PERM", o.perm, "permutation, e.g. 3,1,2")->required();
    rs->add_flag("--json", o.as_json, "write JSON");

    auto* count = app.add_subcommand("count", "count oscillating and standard tableaux");
    count->add_option("--n", o.n, "length")->required();
    count->add_option("--k", o.k, "column bound")->required();
    count->add_option("--m", o.m, "final column length")->required();
    count->add_option("--method", o.method, "brute, bessel or both")
        ->check(CLI::IsMember({"brute", "bessel", "both"}));
    count->add_flag("--table", o.table, "print rows for every length 0..n");

    auto* enumerate = app.add_subcommand("enumerate", "list every object of one family");
    enumerate->add_option("--side", o.side, "osc, syt, gosc or ssyt")
        ->check(CLI::IsMember({"osc", "syt", "gosc", "ssyt"}));
    enumerate->add_option("--n", o.n, "length / size (osc, syt)");
    enumerate->add_option("--k", o.k, "column bound")->required();
    enumerate->add_option("--m", o.m, "final column length / odd columns")->required();
    enumerate->add_option("--content", o.content, "content j1,j2,... (gosc, ssyt)");
    enumerate->add_flag("--json", o.as_json, "write JSON");

    auto* verify = app.add_subcommand("verify", "run a self-verification suite");
    verify->add_option("--suite", o.suite, "thm3, thm4, greene, formula or all")
        ->check(CLI::IsMember({"thm3", "thm4", "greene", "formula", "all"}));
    verify->add_option("--max-n", o.max_n, "size bound for exhaustive checks");
    verify->add_option("--seed", o.seed, "seed of the random cases");
    verify->add_option("--cases", o.cases, "number of random cases");
    verify->add_option("--threads", o.threads, "worker threads (default: OSTAB_THREADS or all cores)");

    auto* diagram = app.add_subcommand("diagram", "dump a growth diagram");
    diagram->require_subcommand(1);
    auto* dforward = diagram->add_subcommand("forward", "sweep a filling");
    auto* dbackward = diagram->add_subcommand("backward", "reconstruct from a boundary word");
    dforward->add_option("--fill", o.fill_path, "filling file")->required();
    dforward->add_option("--arr", o.arr_path, "arrangement file; must match the filling");
    dforward->add_option("--direction", o.direction, "to_top_right or to_bottom_right")
        ->check(CLI::IsMember({"to_top_right", "to_bottom_right"}));
    dforward->add_option("--knuth", o.knuth, "integer filling: ne or se chain orientation")
        ->check(CLI::IsMember({"ne", "se"}));
    dbackward->add_option("--arr", o.arr_path, "arrangement file")->required();
    dbackward->add_option("--boundary", o.boundary_path, "boundary word, one partition per line")
        ->required();
    dbackward->add_option("--direction", o.direction, "from_top_right or from_top_left")
        ->check(CLI::IsMember({"from_top_right", "from_top_left"}));
    dbackward->add_option("--knuth", o.knuth, "integer filling: ne or se chain orientation")
        ->check(CLI::IsMember({"ne", "se"}));
    for (auto* c : {dforward, dbackward})
        c->add_flag("--json", o.as_json, "write JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    auto emit_shapes = [&](const std::vector<Partition>& s) {
        if (o.as_json)
            out << shapes_json(s).dump() << '\n';
        else
            out << format_shapes(s);
    };
    auto emit_tableau = [&](const Tableau& t) {
        if (o.as_json)
            out << tableau_json(t).dump() << '\n';
        else
            out << format_tableau(t);
    };
    auto input = [&]() { return slurp(o.in_path, in); };

    try {
        if (syt2osc->parsed()) {
            emit_shapes(syt_to_oscillating(read_tableau(input()), o.k).shapes);
        } else if (osc2syt->parsed()) {
            OscillatingTableau ot{read_shapes(input())};
            validate_oscillating(ot, o.k);
            emit_tableau(oscillating_to_syt(ot));
        } else if (ssyt2osc->parsed()) {
            emit_shapes(ssyt_to_gen_oscillating(read_tableau(input()), o.k, o.n).shapes);
        } else if (osc2ssyt->parsed()) {
            GeneralizedOscillatingTableau g{read_shapes(input())};
            validate_generalized(g, o.k);
            emit_tableau(gen_oscillating_to_ssyt(g));
        } else if (reduce_odd->parsed()) {
            const OddBoundReduction r = odd_bound_reduce(read_tableau(input()), o.k);
            if (o.as_json) {
                json j = tableau_json(r.core);
                j["marks"] = std::vector<int>(r.marks.begin(), r.marks.end());
                out << j.dump() << '\n';
            } else {
                out << "marks:" << (r.marks.empty() ? "" : " ") << join(r.marks) << '\n'
                    << format_tableau(r.core);
            }
        } else if (expand_odd->parsed()) {
            const std::string text = input();
            std::set<int> marks;
            Tableau core;
            if (looks_like_json(text)) {
                const json j = parse_json(text);
                for (int v : j.value("marks", std::vector<int>{}))
                    marks.insert(v);
                core = read_tableau(text);
            } else {
                std::istringstream lines(text);
                std::string line;
                std::string rest;
                bool have_marks = false;
                while (std::getline(lines, line)) {
                    if (!have_marks) {
                        const auto p = line.find_first_not_of(" \t\r");
                        if (p == std::string::npos || line[p] == '#')
                            continue;
                        if (line.compare(p, 6, "marks:") != 0)
                            throw ValidationError("expected a 'marks:' header line");
                        for (int v : parse_int_list(line.substr(p + 6)))
                            marks.insert(v);
                        have_marks = true;
                        continue;
                    }
                    rest += line + '\n';
                }
                if (!have_marks)
                    throw ValidationError("expected a 'marks:' header line");
                core = parse_tableau(rest);
            }
            emit_tableau(odd_bound_expand(core, marks, o.k));
        } else if (rs->parsed()) {
            const std::vector<int> perm = parse_int_list(o.perm);
            const auto [p, q] = rs_correspondence(perm);
            const auto classical = rs_insertion(perm);
            if (o.as_json) {
                out << json{{"P", tableau_json(p)["tableau"]}, {"Q", tableau_json(q)["tableau"]}}.dump()
                    << '\n';
            } else {
                out << "P:\n" << format_tableau(p) << "Q:\n" << format_tableau(q);
            }
            if (classical.first != p || classical.second != q)
                throw Mismatch("growth diagram and row insertion disagree");
        } else if (count->parsed()) {
            if (o.k < 1)
                throw PreconditionError("--k must be at least 1");
            auto row = [&](int n) {
                const mpz_class osc = count_oscillating(n, o.k, o.m);
                const mpz_class syt = count_syt(n, 2 * o.k, o.m);
                const mpz_class bes = bessel_count(n, o.k, o.m);
                return std::tuple{osc, syt, bes, osc == syt && osc == bes};
            };
            bool all_agree = true;
            if (o.table) {
                out << "n k m oscillating syt bessel agreement\n";
                for (int n = 0; n <= o.n; ++n) {
                    const auto [osc, syt, bes, ok] = row(n);
                    all_agree = all_agree && ok;
                    out << n << ' ' << o.k << ' ' << o.m << ' ' << osc << ' ' << syt << ' ' << bes
                        << ' ' << (ok ? "agree" : "DISAGREE") << '\n';
                }
            } else if (o.method == "brute") {
                const mpz_class osc = count_oscillating(o.n, o.k, o.m);
                const mpz_class syt = count_syt(o.n, 2 * o.k, o.m);
                out << osc << '\n';
                all_agree = osc == syt;
            } else if (o.method == "bessel") {
                out << bessel_count(o.n, o.k, o.m) << '\n';
            } else {
                const auto [osc, syt, bes, ok] = row(o.n);
                out << osc << ' ' << bes << ' ' << (ok ? "agree" : "disagree") << '\n';
                all_agree = ok;
            }
            if (!all_agree)
                throw Mismatch("counting oracles disagree");
        } else if (enumerate->parsed()) {
            std::vector<std::vector<Partition>> words;
            std::vector<Tableau> tabs;
            const std::vector<int> j = parse_int_list(o.content);
            if (o.side == "osc")
                for (auto& x : enumerate_oscillating(o.n, o.k, o.m))
                    words.push_back(std::move(x.shapes));
            else if (o.side == "gosc")
                for (auto& x : enumerate_gen_oscillating(j, o.k, o.m))
                    words.push_back(std::move(x.shapes));
            else if (o.side == "syt")
                tabs = enumerate_syt(o.n, 2 * o.k, o.m);
            else
                tabs = enumerate_ssyt(j, 2 * o.k, o.m);
            if (o.as_json) {
                json a = json::array();
                for (const auto& w : words)
                    a.push_back(shapes_json(w)["shapes"]);
                for (const auto& t : tabs)
                    a.push_back(tableau_json(t)["tableau"]);
                out << a.dump() << '\n';
            } else {
                bool first = true;
                for (const auto& w : words) {
                    out << (first ? "" : "\n") << format_shapes(w);
                    first = false;
                }
                for (const auto& t : tabs) {
                    out << (first ? "" : "\n") << format_tableau(t);
                    first = false;
                }
            }
            err << (words.size() + tabs.size()) << " objects\n";
        } else if (verify->parsed()) {
            SuiteOptions so;
            so.max_n = o.max_n;
            so.seed = o.seed;
            so.random_cases = o.cases;
            so.threads = o.threads > 0 ? o.threads : default_thread_count();
            std::vector<SuiteResult> results;
            if (o.suite == "thm3" || o.suite == "all")
                results.push_back(verify_thm3(so));
            if (o.suite == "thm4" || o.suite == "all")
                results.push_back(verify_thm4(so));
            if (o.suite == "greene" || o.suite == "all")
                results.push_back(verify_greene(so));
            if (o.suite == "formula" || o.suite == "all")
                results.push_back(verify_formula(so));
            bool ok = true;
            for (const auto& r : results) {
                out << r.name << ": " << r.cases << " cases, " << r.failures << " failures"
                    << (r.ok() ? "" : "; first: " + r.first_failure) << '\n';
                ok = ok && r.ok();
            }
            if (!ok)
                return kExitMismatch;
        } else if (dforward->parsed()) {
            const Filling f = read_filling(slurp(o.fill_path, in));
            if (!o.arr_path.empty() && read_arrangement(slurp(o.arr_path, in)) != f.arrangement())
                throw ValidationError("--arr does not match the arrangement line of --fill");
            if (!o.knuth.empty()) {
                if (o.direction == "to_bottom_right")
                    throw ValidationError("--knuth sweeps run to the top right only");
                const KnuthDiagram d = knuth_forward_sweep(
                    f, o.knuth == "ne" ? ChainOrientation::north_east : ChainOrientation::south_east);
                json corners = json::array();
                std::ostringstream text;
                for (int x = 0; x <= f.arrangement().width(); ++x)
                    for (int y = 0; y <= f.arrangement().corner_height(x); ++y) {
                        text << x << ' ' << y << ' ' << to_string(d.label(x, y)) << '\n';
                        corners.push_back(
                            {{"x", x}, {"y", y}, {"label", partition_json(d.label(x, y))}});
                    }
                if (o.as_json) {
                    json j = filling_json(f);
                    j["corners"] = corners;
                    out << j.dump() << '\n';
                } else {
                    out << text.str();
                }
            } else {
                const GrowthDiagram d = forward_sweep(
                    f, o.direction == "to_bottom_right" ? ForwardDirection::to_bottom_right
                                                        : ForwardDirection::to_top_right);
                if (o.as_json)
                    out << diagram_json(d).dump() << '\n';
                else
                    out << format_diagram(d);
            }
        } else if (dbackward->parsed()) {
            const CellArrangement arr = read_arrangement(slurp(o.arr_path, in));
            const BoundaryWord word = read_shapes(slurp(o.boundary_path, in));
            if (!o.knuth.empty()) {
                if (o.direction == "from_top_left")
                    throw ValidationError("--knuth sweeps start from the top right only");
                const Filling f = knuth_backward_sweep(
                    arr, word,
                    o.knuth == "ne" ? ChainOrientation::north_east : ChainOrientation::south_east);
                out << (o.as_json ? filling_json(f).dump() + "\n" : format_filling(f));
            } else {
                const GrowthDiagram d = backward_diagram(
                    arr, word,
                    o.direction == "from_top_left" ? BackwardDirection::from_top_left
                                                   : BackwardDirection::from_top_right);
                if (o.as_json)
                    out << diagram_json(d).dump() << '\n';
                else
                    out << format_filling(d.filling()) << format_diagram(d);
            }
        }
    } catch (const Mismatch& e) {
        err << "mismatch: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const json::exception& e) {
        err << "error: bad JSON input: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {
        err << "internal consistency check failed: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace ostab::cli
