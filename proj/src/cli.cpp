#include "nicx/cli.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nicx/characters.hpp"
#include "nicx/errors.hpp"
#include "nicx/homology.hpp"
#include "nicx/modp.hpp"
#include "nicx/morse.hpp"
#include "nicx/series.hpp"
#include "nicx/sigma.hpp"
#include "nicx/tables.hpp"
#include "nicx/verify.hpp"

using nlohmann::json;

namespace nicx {

namespace {

constexpr std::uint64_t kFullFaceGuard = 1ull << 24;
constexpr std::uint64_t kWindowFaceGuard = 10'000'000;

struct Opts {
    int n = -1;
    int k = -1;
    int i = 2;
    int dim = -1;
    long long mod_p = 0;
    int order = kDefaultSeriesOrder;
    int jobs = 1;
    bool force = false;
    std::string format = "plain";
    std::string family;
    std::string suite = "all";
    int table_id = 0;
    int n_min = -1;
    int n_max = -1;
    int wn_max = 8;
};

// ------------------------------------------------------------- rendering ---

struct Grid {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void render_grid(const Grid& g, const std::string& fmt, std::ostream& out) {
    if (fmt == "csv") {
        for (std::size_t j = 0; j < g.header.size(); ++j)
            out << (j ? "," : "") << csv_cell(g.header[j]);
        out << "\n";
        for (const auto& row : g.rows) {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? "," : "") << csv_cell(row[j]);
            out << "\n";
        }
        return;
    }
    if (fmt == "markdown") {
        out << "|";
        for (const auto& h : g.header) out << " " << h << " |";
        out << "\n|";
        for (std::size_t j = 0; j < g.header.size(); ++j) out << " --- |";
        out << "\n";
        for (const auto& row : g.rows) {
            out << "|";
            for (const auto& cell : row) out << " " << cell << " |";
            out << "\n";
        }
        return;
    }
    std::vector<std::size_t> w(g.header.size());
    for (std::size_t j = 0; j < g.header.size(); ++j) w[j] = g.header[j].size();
    for (const auto& row : g.rows)
        for (std::size_t j = 0; j < row.size() && j < w.size(); ++j)
            w[j] = std::max(w[j], row[j].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << "  ";
            out << row[j];
            if (j + 1 < row.size())
                out << std::string(w[j] - std::min(w[j], row[j].size()), ' ');
        }
        out << "\n";
    };
    line(g.header);
    std::size_t total = 0;
    for (std::size_t j = 0; j < w.size(); ++j) total += w[j] + (j ? 2 : 0);
    out << std::string(total, '-') << "\n";
    for (const auto& row : g.rows) line(row);
}

json torsion_json(const std::vector<BigInt>& torsion) {
    json arr = json::array();
    for (const BigInt& t : torsion) {
        if (t < BigInt(std::numeric_limits<long long>::max()))
            arr.push_back(t.convert_to<long long>());
        else
            arr.push_back(t.str());
    }
    return arr;
}

void emit(const std::string& fmt, const Grid& grid, const json& j, std::ostream& out,
          const std::vector<std::string>& notes = {}) {
    if (fmt == "json") {
        out << j.dump(2) << "\n";
        return;
    }
    render_grid(grid, fmt, out);
    for (const auto& note : notes) out << note << "\n";
}

// --------------------------------------------------------------- familes ---

SimplicialComplex build_family(const Opts& o) {
    std::uint64_t guard = o.force ? 0 : (o.dim >= 0 ? kWindowFaceGuard : kFullFaceGuard);
    int bound = o.dim >= 0 ? o.dim + 1 : -1;
    if (o.n < 0) throw invalid_request("--n is required for this family");
    if (o.family == "graphs")
        return not_i_connected_complex(o.n, 2, o.i, bound, guard, o.jobs);
    if (o.family == "hypergraphs") {
        if (o.k < 2) throw invalid_request("--k >= 2 is required for hypergraphs");
        return not_i_connected_complex(o.n, o.k, o.i, bound, guard, o.jobs);
    }
    if (o.family == "matching") return matching_complex(o.n, guard);
    if (o.family == "chessboard") {
        int rows = o.k > 0 ? o.k : o.n;
        return chessboard_complex(rows, o.n, guard);
    }
    if (o.family == "paths-cycles") return paths_cycles_complex(o.n, false, guard);
    if (o.family == "paths-cycles-no4") return paths_cycles_complex(o.n, true, guard);
    throw invalid_request(
        "unknown family: " + o.family +
        " (use graphs|hypergraphs|matching|chessboard|paths-cycles|paths-cycles-no4)");
}

// ------------------------------------------------------------------ cmds ---

int cmd_complex(const Opts& o, std::ostream& out) {
    SimplicialComplex c = build_family(o);
    Grid g;
    g.header = {"dim", "faces"};
    json jl = json::object();
    g.rows.push_back({"-1", "1"});
    jl["-1"] = 1;
    for (const auto& [d, faces] : c.levels) {
        g.rows.push_back({std::to_string(d), std::to_string(faces.size())});
        jl[std::to_string(d)] = faces.size();
    }
    json j{{"family", o.family}, {"universe", c.universe}, {"complete", c.complete},
           {"dim", c.dim()}, {"levels", jl},
           {"faces", c.stored_face_count() + 1}};
    std::vector<std::string> notes;
    notes.push_back("universe " + std::to_string(c.universe) + ", dimension " +
                    std::to_string(c.dim()) + ", " +
                    std::to_string(c.stored_face_count() + 1) + " faces");
    if (c.complete) {
        j["reduced_euler"] = c.reduced_euler();
        notes.push_back("reduced euler characteristic " +
                        std::to_string(c.reduced_euler()));
    }
    emit(o.format, g, j, out, notes);
    return 0;
}

int cmd_homology(const Opts& o, std::ostream& out) {
    SimplicialComplex c = build_family(o);
    Grid g;
    json j{{"family", o.family}, {"n", o.n}};
    if (o.mod_p > 0) {
        if (!is_prime(o.mod_p)) throw invalid_request("--mod-p must be a prime");
        g.header = {"dim", "betti_mod_p"};
        json arr = json::array();
        std::vector<int> dims;
        if (o.dim >= 0)
            dims.push_back(o.dim);
        else
            for (int d = 0; d <= c.dim(); ++d) dims.push_back(d);
        for (int d : dims) {
            std::int64_t b = betti_mod_p(c, d, o.mod_p);
            g.rows.push_back({std::to_string(d), std::to_string(b)});
            arr.push_back(json{{"dim", d}, {"betti", b}});
        }
        j["mod_p"] = o.mod_p;
        j["betti_mod_p"] = std::move(arr);
        emit(o.format, g, j, out);
        return 0;
    }
    g.header = {"dim", "group", "betti", "torsion"};
    json arr = json::array();
    auto push = [&](int d, const HomologyGroup& h) {
        g.rows.push_back({std::to_string(d), group_to_string(h),
                          std::to_string(h.betti),
                          torsion_json(h.torsion).dump()});
        arr.push_back(json{{"dim", d}, {"betti", h.betti},
                           {"torsion", torsion_json(h.torsion)}});
    };
    if (o.dim >= 0) {
        push(o.dim, homology_window(c, o.dim));
    } else {
        ReducedHomology h = reduced_homology(c);
        for (const auto& [d, grp] : h)
            if (d >= 0 || !grp.trivial()) push(d, grp);
    }
    j["homology"] = std::move(arr);
    emit(o.format, g, j, out);
    return 0;
}

int cmd_morse_verify(const Opts& o, std::ostream& out) {
    SimplicialComplex c = build_delta_k1k(o.n, o.k);
    MorseMatching m = apm_matching(o.n, o.k);
    MatchingReport rep = is_acyclic_perfect_matching(c, m);
    CollapseResult col = collapse_by_matching(c, m);
    Grid g;
    g.header = {"property", "value"};
    auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    g.rows = {{"faces", std::to_string(c.stored_face_count() + 1)},
              {"pairs", std::to_string(m.pairs.size())},
              {"matching", yn(rep.matching)},
              {"perfect", yn(rep.perfect)},
              {"acyclic", yn(rep.acyclic)},
              {"collapse", yn(col.ok)}};
    json j{{"n", o.n}, {"k", o.k},
           {"faces", c.stored_face_count() + 1},
           {"pairs", m.pairs.size()},
           {"matching", rep.matching},
           {"perfect", rep.perfect},
           {"acyclic", rep.acyclic},
           {"collapse", col.ok}};
    if (!col.ok) j["collapse_reason"] = col.reason;
    emit(o.format, g, j, out);
    return rep.all() && col.ok ? 0 : 1;
}

int cmd_morse_collapse(const Opts& o, std::ostream& out) {
    SimplicialComplex c = build_delta_k1k(o.n, o.k);
    MorseMatching m = apm_matching(o.n, o.k);
    CollapseResult col = collapse_by_matching(c, m);
    Grid g;
    g.header = {"step", "free face", "containing face"};
    for (std::size_t s = 0; s < col.trace.size(); ++s)
        g.rows.push_back({std::to_string(s), format_face(col.trace[s].free_face),
                          format_face(col.trace[s].containing)});
    json steps = json::array();
    for (const auto& st : col.trace)
        steps.push_back(json{{"free", format_face(st.free_face)},
                             {"containing", format_face(st.containing)}});
    json j{{"n", o.n}, {"k", o.k}, {"ok", col.ok}, {"steps", std::move(steps)},
           {"final", format_face(col.final_node)}};
    if (!col.ok) j["reason"] = col.reason;
    std::vector<std::string> notes;
    if (col.ok)
        notes.push_back("collapsed " + std::to_string(col.trace.size()) +
                        " pairs; last vertex " + format_face(col.final_node));
    else
        notes.push_back("collapse failed: " + col.reason);
    emit(o.format, g, j, out, notes);
    return col.ok ? 0 : 1;
}

int cmd_morse_export(const Opts& o, std::ostream& out) {
    MorseMatching m = apm_matching(o.n, o.k);
    if (o.format == "json") {
        json pairs = json::array();
        for (const auto& [a, b] : m.pairs)
            pairs.push_back(json::array({format_face(a), format_face(b)}));
        out << json{{"n", o.n}, {"k", o.k}, {"pairs", std::move(pairs)}}.dump(2)
            << "\n";
        return 0;
    }
    out << format_matching(m);
    return 0;
}

struct BuiltPoset {
    FinitePoset p;
    std::optional<SigmaLattice> sigma;
    json meta;
};

BuiltPoset build_poset(const Opts& o) {
    BuiltPoset b;
    if (o.family == "partition") {
        if (o.n < 1) throw invalid_request("--n is required");
        b.p = partition_lattice(o.n);
        b.meta = json{{"family", "partition"}, {"n", o.n}};
    } else if (o.family == "kequal") {
        if (o.n < 1 || o.k < 2) throw invalid_request("--n and --k >= 2 are required");
        b.p = k_equal_lattice(o.n, o.k);
        b.meta = json{{"family", "kequal"}, {"n", o.n}, {"k", o.k}};
    } else if (o.family == "boolean") {
        if (o.n < 0) throw invalid_request("--n is required");
        b.p = boolean_lattice(o.n);
        b.meta = json{{"family", "boolean"}, {"n", o.n}};
    } else if (o.family == "sigma") {
        if (o.n < 2) throw invalid_request("--n is required");
        int k = o.k > 0 ? o.k : 2;
        b.sigma = sigma_lattice(o.n, k);
        b.p = b.sigma->poset;
        b.meta = json{{"family", "sigma"}, {"n", o.n}, {"k", k}};
    } else {
        throw invalid_request("unknown poset family: " + o.family +
                              " (use partition|kequal|boolean|sigma)");
    }
    return b;
}

int cmd_poset_mobius(const Opts& o, std::ostream& out) {
    BuiltPoset b = build_poset(o);
    if (b.p.bottom < 0 || b.p.top < 0)
        throw invalid_request("mobius needs a bounded poset");
    long long mu = moebius(b.p, b.p.bottom, b.p.top);
    Grid g;
    g.header = {"size", "mobius"};
    g.rows.push_back({std::to_string(b.p.n), std::to_string(mu)});
    json j = b.meta;
    j["size"] = b.p.n;
    j["mobius"] = mu;
    emit(o.format, g, j, out);
    return 0;
}

int cmd_poset_ranks(const Opts& o, std::ostream& out) {
    BuiltPoset b = build_poset(o);
    if (b.p.bottom < 0 || b.p.top < 0)
        throw invalid_request("ranks needs a bounded poset");
    json j = b.meta;
    Grid g;
    g.header = {"property", "value"};
    g.rows.push_back({"size", std::to_string(b.p.n)});
    j["size"] = b.p.n;
    if (b.sigma) {
        ChainReport r = rank_and_chain_spectrum(*b.sigma);
        std::string lens;
        for (int l : r.chain_lengths) lens += (lens.empty() ? "" : " ") + std::to_string(l);
        g.rows.push_back({"chain lengths", lens});
        g.rows.push_back({"rank formula checked", r.rank_checked ? "yes" : "no"});
        g.rows.push_back({"graded", r.graded ? "yes" : "no"});
        j["chain_lengths"] = r.chain_lengths;
        j["rank_checked"] = r.rank_checked;
        j["graded"] = r.graded;
        if (r.rank_checked) {
            std::map<int, int> hist;
            for (Face f : b.sigma->graphs) hist[sigma_rank(b.sigma->n, b.sigma->k, f)]++;
            json jh = json::object();
            std::string hs;
            for (const auto& [rank, count] : hist) {
                jh[std::to_string(rank)] = count;
                hs += (hs.empty() ? "" : " ") + std::to_string(rank) + ":" +
                      std::to_string(count);
            }
            g.rows.push_back({"elements per rank", hs});
            j["rank_histogram"] = std::move(jh);
        }
    } else {
        // maximal-chain length spectrum by a descending sweep from the top
        std::vector<std::set<int>> len(static_cast<std::size_t>(b.p.n));
        for (int x = b.p.n - 1; x >= 0; --x) {
            if (x == b.p.top) {
                len[std::size_t(x)] = {0};
                continue;
            }
            for (int y : b.p.covers_up[std::size_t(x)])
                for (int l : len[std::size_t(y)]) len[std::size_t(x)].insert(l + 1);
        }
        std::string lens;
        for (int l : len[std::size_t(b.p.bottom)])
            lens += (lens.empty() ? "" : " ") + std::to_string(l);
        g.rows.push_back({"chain lengths", lens});
        j["chain_lengths"] = len[std::size_t(b.p.bottom)];
    }
    emit(o.format, g, j, out);
    return 0;
}

int cmd_poset_covers(const Opts& o, std::ostream& out) {
    BuiltPoset b = build_poset(o);
    Grid g;
    json arr = json::array();
    std::map<std::pair<int, int>, CoverType> types;
    if (b.sigma) types = classify_covers(*b.sigma);
    g.header = b.sigma ? std::vector<std::string>{"lower", "upper", "shape"}
                       : std::vector<std::string>{"lower", "upper"};
    auto shape_name = [](CoverType t) {
        switch (t) {
            case CoverType::CliqueAcross: return "clique-across";
            case CoverType::BlockMerge: return "block-merge";
            default: return "star-join";
        }
    };
    for (const auto& [x, y] : b.p.cover_pairs()) {
        json jc{{"lower", b.p.label(x)}, {"upper", b.p.label(y)}};
        std::vector<std::string> row{b.p.label(x), b.p.label(y)};
        if (b.sigma) {
            const char* s = shape_name(types.at({x, y}));
            row.push_back(s);
            jc["shape"] = s;
        }
        g.rows.push_back(std::move(row));
        arr.push_back(std::move(jc));
    }
    json j = b.meta;
    j["count"] = arr.size();
    j["covers"] = std::move(arr);
    emit(o.format, g, j, out,
         {std::to_string(g.rows.size()) + " cover relations"});
    return 0;
}

int cmd_series(const Opts& o, std::ostream& out) {
    if (o.order < 1 || o.order > 64) throw invalid_request("--order must be in 1..64");
    Grid g;
    json j{{"family", o.family}, {"order", o.order}};
    if (o.family == "tau" || o.family == "mobius" || o.family == "alpha") {
        int k = o.k > 0 ? o.k : 2;
        if (k < 2) throw invalid_request("--k must be >= 2");
        EgfSequence seq = o.family == "tau"      ? tau_series(k, o.order)
                          : o.family == "mobius" ? mobius_series(k, o.order)
                                                 : alpha_series(k, o.order);
        j["k"] = k;
        g.header = {"n", "value"};
        json vals = json::array();
        for (int n = 1; n <= o.order; ++n) {
            g.rows.push_back({std::to_string(n), seq.at(n).str()});
            vals.push_back(json{{"n", n}, {"value", seq.at(n).str()}});
        }
        j["values"] = std::move(vals);
        emit(o.format, g, j, out);
        return 0;
    }
    if (o.family == "nminus3" || o.family == "cyclepath") {
        SeriesWithValues sv = o.family == "nminus3" ? dual_euler_series_nminus3(o.order)
                                                    : cycles_paths_series(o.order);
        g.header = {"n", "coefficient", "value"};
        json coeffs = json::array(), vals = json::array();
        for (int n = 0; n <= o.order; ++n) {
            g.rows.push_back({std::to_string(n), rat_string(sv.series.coeff(n)),
                              sv.values.values[std::size_t(n)].str()});
            coeffs.push_back(rat_string(sv.series.coeff(n)));
            vals.push_back(sv.values.values[std::size_t(n)].str());
        }
        j["coefficients"] = std::move(coeffs);
        j["values"] = std::move(vals);
        emit(o.format, g, j, out);
        return 0;
    }
    if (o.family == "table6") {
        g.header = {"series", "n", "coefficient", "value"};
        json arr = json::array();
        for (const LabeledSeries& ls : table6_series(o.order)) {
            EgfSequence seq = egf_values(ls.series);
            json coeffs = json::array(), vals = json::array();
            for (int n = 0; n <= o.order; ++n) {
                g.rows.push_back({ls.name, std::to_string(n),
                                  rat_string(ls.series.coeff(n)),
                                  seq.values[std::size_t(n)].str()});
                coeffs.push_back(rat_string(ls.series.coeff(n)));
                vals.push_back(seq.values[std::size_t(n)].str());
            }
            arr.push_back(json{{"name", ls.name}, {"note", ls.note},
                               {"coefficients", std::move(coeffs)},
                               {"values", std::move(vals)}});
        }
        j["series"] = std::move(arr);
        emit(o.format, g, j, out);
        return 0;
    }
    throw invalid_request("unknown series family: " + o.family +
                          " (use tau|mobius|alpha|nminus3|cyclepath|table6)");
}

std::string type_string(const CycleType& t) {
    std::string s;
    for (int part : t) s += (s.empty() ? "" : " ") + std::to_string(part);
    return s;
}

int cmd_character_omega(const Opts& o, std::ostream& out) {
    if (o.n < 3) throw invalid_request("--n >= 3 is required");
    ClassFunction w = omega_n2(o.n);
    Grid g;
    g.header = {"class", "value"};
    json vals = json::array();
    for (std::size_t c = 0; c < w.classes.size(); ++c) {
        g.rows.push_back({type_string(w.classes[c]), rat_string(w.values[c])});
        vals.push_back(json{{"class", w.classes[c]}, {"value", rat_string(w.values[c])}});
    }
    json j{{"n", o.n}, {"character", "omega_n^2"}, {"values", std::move(vals)}};
    emit(o.format, g, j, out);
    return 0;
}

int cmd_character_wn(const Opts& o, std::ostream& out) {
    if (o.wn_max < 3) throw invalid_request("--max >= 3 is required");
    Grid g;
    g.header = {"n", "w_n"};
    json vals = json::array();
    for (int n = 3; n <= o.wn_max; ++n) {
        BigInt w = trivial_multiplicity(n);
        g.rows.push_back({std::to_string(n), w.str()});
        vals.push_back(json{{"n", n}, {"value", w.str()}});
    }
    json j{{"character", "trivial multiplicity"}, {"values", std::move(vals)}};
    emit(o.format, g, j, out);
    return 0;
}

int cmd_character_lie(const Opts& o, std::ostream& out) {
    if (o.n < 2) throw invalid_request("--n >= 2 is required");
    ClassFunction closed = lie_character(o.n);
    ClassFunction induced = lie_character_induced(o.n);
    bool match = closed.values == induced.values;
    Grid g;
    g.header = {"class", "value"};
    json vals = json::array();
    for (std::size_t c = 0; c < closed.classes.size(); ++c) {
        g.rows.push_back({type_string(closed.classes[c]), rat_string(closed.values[c])});
        vals.push_back(
            json{{"class", closed.classes[c]}, {"value", rat_string(closed.values[c])}});
    }
    json j{{"n", o.n}, {"character", "lie"}, {"matches_induced", match},
           {"values", std::move(vals)}};
    emit(o.format, g, j, out,
         {std::string("closed form matches induction: ") + (match ? "yes" : "no")});
    return match ? 0 : 1;
}

void table_grids(const TableResult& res, int id, std::vector<Grid>& grids,
                 std::vector<std::string>& notes) {
    auto cell_str = [](const json& c) {
        if (!c.contains("value") || c.at("value").is_null()) return std::string("?");
        const json& v = c.at("value");
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    auto match_str = [](const json& m) {
        if (m.is_null()) return std::string("-");
        return m.get<bool>() ? std::string("yes") : std::string("NO");
    };
    if (id == 1) {
        Grid g;
        g.header = {"n", "computed", "expected", "match"};
        for (const auto& row : res.rows)
            g.rows.push_back({std::to_string(row.at("n").get<int>()),
                              cell_str(row.at("computed")), cell_str(row.at("expected")),
                              match_str(row.at("match"))});
        grids.push_back(std::move(g));
        return;
    }
    if (id == 6) {
        Grid g;
        g.header = {"series", "status", "integral"};
        Grid checks;
        checks.header = {"check", "n", "computed", "expected", "match"};
        for (const auto& row : res.rows) {
            if (row.contains("checks")) {
                for (const auto& c : row.at("checks"))
                    checks.rows.push_back({row.at("name").get<std::string>(),
                                           std::to_string(c.at("n").get<int>()),
                                           cell_str(c.at("computed")),
                                           cell_str(c.at("expected")),
                                           match_str(c.at("match"))});
                continue;
            }
            g.rows.push_back({row.at("name").get<std::string>(),
                              row.at("status").get<std::string>(),
                              row.value("integral", false) ? "yes" : "NO"});
            if (row.contains("note"))
                notes.push_back(row.at("name").get<std::string>() + ": " +
                                row.at("note").get<std::string>());
        }
        grids.push_back(std::move(g));
        grids.push_back(std::move(checks));
        return;
    }
    Grid g;
    g.header = {"n", "dim", "computed", "expected", "match"};
    Grid scans;
    scans.header = {"n", "p", "dim", "betti mod p", "predicted", "match"};
    for (const auto& row : res.rows) {
        int n = row.at("n").get<int>();
        if (row.at("status") == "infeasible")
            notes.push_back("n=" + std::to_string(n) + " not computed: " +
                            row.value("detail", std::string()));
        for (const auto& c : row.at("cells"))
            g.rows.push_back({std::to_string(n), std::to_string(c.at("dim").get<int>()),
                              cell_str(c.at("computed")), cell_str(c.at("expected")),
                              match_str(c.at("match"))});
        if (row.contains("prime_scan"))
            for (const auto& ps : row.at("prime_scan"))
                for (const auto& pd : ps.at("dims"))
                    scans.rows.push_back(
                        {std::to_string(n), std::to_string(ps.at("p").get<long long>()),
                         std::to_string(pd.at("dim").get<int>()),
                         std::to_string(pd.at("betti_mod_p").get<long long>()),
                         std::to_string(pd.at("predicted").get<long long>()),
                         match_str(pd.at("match"))});
        if (row.contains("wedge_count_note")) {
            const json& w = row.at("wedge_count_note");
            notes.push_back("n=" + std::to_string(n) + ": top betti " +
                            w.at("betti").dump() + " vs wedge count " +
                            w.at("wedge_formula").get<std::string>() + " -> " +
                            (w.at("agrees").get<bool>() ? "agrees" : "disagrees") +
                            " (consistency note)");
        }
        if (row.contains("discrepancy_note"))
            notes.push_back("n=" + std::to_string(n) + ": " +
                            row.at("discrepancy_note").get<std::string>());
    }
    grids.push_back(std::move(g));
    if (!scans.rows.empty()) grids.push_back(std::move(scans));
}

int cmd_table(const Opts& o, std::ostream& out) {
    TableRequest req;
    req.id = o.table_id;
    req.n_lo = o.n >= 0 ? o.n : o.n_min;
    req.n_hi = o.n >= 0 ? o.n : o.n_max;
    req.order = o.order;
    req.force = o.force;
    req.jobs = o.jobs;
    TableResult res = run_table(req);
    if (o.format == "json") {
        json j{{"table", o.table_id}, {"title", res.title}, {"rows", res.rows},
               {"all_match", res.all_match}};
        out << j.dump(2) << "\n";
        return res.all_match ? 0 : 1;
    }
    std::vector<Grid> grids;
    std::vector<std::string> notes;
    table_grids(res, o.table_id, grids, notes);
    out << res.title << "\n";
    for (std::size_t i = 0; i < grids.size(); ++i) {
        if (i) out << "\n";
        if (!grids[i].rows.empty() || i == 0) render_grid(grids[i], o.format, out);
    }
    for (const auto& note : notes) out << note << "\n";
    out << (res.all_match ? "all rows match" : "MISMATCH against expected values")
        << "\n";
    return res.all_match ? 0 : 1;
}

int cmd_verify(const Opts& o, std::ostream& out) {
    std::vector<CheckResult> checks = verify_suite(o.suite, o.jobs);
    int failed = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) ++failed;
    if (o.format == "json") {
        json j = checks_to_json(checks);
        j["suite"] = o.suite;
        out << j.dump(2) << "\n";
        return failed == 0 ? 0 : 1;
    }
    Grid g;
    g.header = {"check", "result", "detail"};
    for (const CheckResult& c : checks)
        g.rows.push_back({c.name, c.pass ? "pass" : "FAIL", c.detail});
    render_grid(g, o.format, out);
    out << checks.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for connectivity complexes of graphs and hypergraphs"};
    app.name("nicx");
    Opts o;

    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"plain", "markdown", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", o.jobs, "worker threads for enumeration")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_flag("--force", o.force, "lift the face-count guards");

    auto add_family = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--family", o.family,
                                    "graphs|hypergraphs|matching|chessboard|"
                                    "paths-cycles|paths-cycles-no4");
        if (required) opt->required();
    };

    CLI::App* complex_cmd = app.add_subcommand("complex", "enumerate a complex");
    add_family(complex_cmd, true);
    complex_cmd->add_option("--n", o.n, "vertices / board columns")->required();
    complex_cmd->add_option("--k", o.k, "hyperedge size or board rows");
    complex_cmd->add_option("--i", o.i, "connectivity threshold")->capture_default_str();
    complex_cmd->add_option("--dim", o.dim, "enumerate dimensions <= dim+1 only");

    CLI::App* homology_cmd =
        app.add_subcommand("homology", "integral or mod-p reduced homology");
    add_family(homology_cmd, true);
    homology_cmd->add_option("--n", o.n, "vertices / board columns")->required();
    homology_cmd->add_option("--k", o.k, "hyperedge size or board rows");
    homology_cmd->add_option("--i", o.i, "connectivity threshold")->capture_default_str();
    homology_cmd->add_option("--dim", o.dim, "single dimension (window mode)");
    homology_cmd->add_option("--mod-p", o.mod_p, "betti numbers over GF(p)");

    CLI::App* morse_cmd = app.add_subcommand("morse", "structured matchings");
    morse_cmd->require_subcommand(1);
    for (const char* sub : {"verify", "collapse", "export"}) {
        CLI::App* c = morse_cmd->add_subcommand(
            sub, std::string(sub) == "verify"
                     ? "check the matching flags and run the collapse"
                     : (std::string(sub) == "collapse" ? "print the collapse trace"
                                                       : "print the matched pairs"));
        c->add_option("--n", o.n, "vertices")->required();
        c->add_option("--k", o.k, "filtration index")->required();
        c->fallthrough();
    }
    morse_cmd->fallthrough();

    CLI::App* poset_cmd = app.add_subcommand("poset", "finite posets and lattices");
    poset_cmd->require_subcommand(1);
    for (const char* sub : {"mobius", "ranks", "covers"}) {
        CLI::App* c = poset_cmd->add_subcommand(
            sub, std::string(sub) == "mobius"
                     ? "mobius value between the bounds"
                     : (std::string(sub) == "ranks" ? "rank and chain-length report"
                                                    : "cover relations"));
        c->add_option("--family", o.family, "partition|kequal|boolean|sigma")->required();
        c->add_option("--n", o.n, "ground-set size");
        c->add_option("--k", o.k, "block threshold");
        c->fallthrough();
    }
    poset_cmd->fallthrough();

    CLI::App* series_cmd = app.add_subcommand("series", "generating functions");
    series_cmd->add_option("--family", o.family,
                           "tau|mobius|alpha|nminus3|cyclepath|table6")
        ->required();
    series_cmd->add_option("--k", o.k, "block threshold");
    series_cmd->add_option("--order", o.order, "truncation order")->capture_default_str();

    CLI::App* character_cmd = app.add_subcommand("character", "symmetric-group characters");
    character_cmd->require_subcommand(1);
    CLI::App* omega_cmd = character_cmd->add_subcommand("omega", "the squared character");
    omega_cmd->add_option("--n", o.n, "symbols")->required();
    omega_cmd->fallthrough();
    CLI::App* wn_cmd = character_cmd->add_subcommand("wn", "trivial multiplicities");
    wn_cmd->add_option("--max", o.wn_max, "largest n")->capture_default_str();
    wn_cmd->fallthrough();
    CLI::App* lie_cmd = character_cmd->add_subcommand("lie", "cyclic-induced character");
    lie_cmd->add_option("--n", o.n, "symbols")->required();
    lie_cmd->fallthrough();
    character_cmd->fallthrough();

    CLI::App* table_cmd = app.add_subcommand("table", "computed vs embedded tables");
    table_cmd->add_option("--id", o.table_id, "table number 1..6")->required();
    table_cmd->add_option("--n", o.n, "single row");
    table_cmd->add_option("--n-min", o.n_min, "first row");
    table_cmd->add_option("--n-max", o.n_max, "last row");
    table_cmd->add_option("--order", o.order, "series truncation (table 6)")
        ->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "cross-check suites");
    verify_cmd->add_option("--suite", o.suite,
                           "morse|duality|sigma|series|characters|all")
        ->capture_default_str();

    for (CLI::App* c : {complex_cmd, homology_cmd, series_cmd, table_cmd, verify_cmd})
        c->fallthrough();
    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("nicx");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (complex_cmd->parsed()) return cmd_complex(o, out);
        if (homology_cmd->parsed()) return cmd_homology(o, out);
        if (morse_cmd->parsed()) {
            if (morse_cmd->get_subcommand("verify")->parsed())
                return cmd_morse_verify(o, out);
            if (morse_cmd->get_subcommand("collapse")->parsed())
                return cmd_morse_collapse(o, out);
            return cmd_morse_export(o, out);
        }
        if (poset_cmd->parsed()) {
            if (poset_cmd->get_subcommand("mobius")->parsed())
                return cmd_poset_mobius(o, out);
            if (poset_cmd->get_subcommand("ranks")->parsed())
                return cmd_poset_ranks(o, out);
            return cmd_poset_covers(o, out);
        }
        if (series_cmd->parsed()) return cmd_series(o, out);
        if (character_cmd->parsed()) {
            if (omega_cmd->parsed()) return cmd_character_omega(o, out);
            if (wn_cmd->parsed()) return cmd_character_wn(o, out);
            return cmd_character_lie(o, out);
        }
        if (table_cmd->parsed()) return cmd_table(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
    } catch (const invalid_request& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const infeasible& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const check_failure& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const invariant_violation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace nicx
