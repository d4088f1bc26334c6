#include "kmarkov_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kmarkov/contfrac.hpp"
#include "kmarkov/lattice.hpp"
#include "kmarkov/markov.hpp"
#include "kmarkov/parallel.hpp"
#include "kmarkov/poset.hpp"
#include "kmarkov/skein.hpp"
#include "kmarkov/verify.hpp"
#include "kmarkov_cli/json_io.hpp"

namespace kmarkov::cli {

namespace {

enum class Format { Text, Json, Csv };

struct Context {
    std::ostream& out;
    std::ostream& err;
    Format format;
    unsigned jobs;
};

using Rows = std::vector<std::vector<std::string>>;

void print_columns(std::ostream& out, const Rows& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

void print_csv(std::ostream& out, const Rows& rows) {
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << "\n";
    }
}

void require_no_csv(const Context& ctx, const char* command) {
    if (ctx.format == Format::Csv) throw ValidationError(std::string("--format csv is not available for ") + command);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

CFSequence parse_sequence(const std::string& text) {
    CFSequence seq;
    for (const auto& part : split(text, ',')) seq.push_back(parse_integer(part));
    if (seq.empty()) throw ValidationError("empty sequence");
    return seq;
}

Shape parse_shape(const std::string& text) {
    Shape s;
    for (const auto& v : parse_sequence(text)) {
        if (v < 1 || !v.fits_ulong_p()) throw ValidationError("shape entries must be positive: " + text);
        s.push_back(v.get_ui());
    }
    if (!valid_shape(s)) throw ValidationError("not a valid shape (entries >= 1, last >= 2): " + text);
    return s;
}

LatticePoint parse_point(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw ValidationError("expected X,Y: " + text);
    return {parse_integer(parts[0]), parse_integer(parts[1])};
}

std::vector<std::size_t> parse_indices(const std::string& text, std::size_t count) {
    std::vector<std::size_t> out;
    for (const auto& part : split(text, ',')) {
        Integer v = parse_integer(part);
        if (v < 1 || !v.fits_ulong_p()) throw ValidationError("indices must be positive: " + text);
        out.push_back(v.get_ui());
    }
    if (out.size() != count) throw ValidationError("expected " + std::to_string(count) + " indices: " + text);
    return out;
}

Method parse_method(const std::string& m) {
    if (m == "tree") return Method::Tree;
    if (m == "poset") return Method::Poset;
    return Method::Both;
}

Side parse_side(const std::string& s) { return s == "right" ? Side::Right : Side::Left; }

std::string path_str(const TreePath& p) {
    std::string s;
    for (Step st : p.steps) s += st == Step::L ? 'L' : 'R';
    return s.empty() ? "-" : s;
}

std::string point_str(const LatticePoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::string shape_str(const FencePoset& p) {
    if (p.empty()) return "empty";
    std::string s = "[";
    const Shape sh = shape_of(p);
    for (std::size_t i = 0; i < sh.size(); ++i) s += (i ? "," : "") + std::to_string(sh[i]);
    return s + "]";
}

std::string dirs_str(const FencePoset& p) {
    std::string s;
    for (Dir d : p.directions()) s += to_char(d);
    return s.empty() ? "-" : s;
}

std::string passfail(bool ok) { return ok ? "PASS" : "FAIL"; }

struct NumberOpts {
    unsigned k = 0;
    std::string fraction;
    std::string method = "tree";
};

int cmd_number(const Context& ctx, const NumberOpts& o) {
    Fraction r = parse_fraction(o.fraction);
    Integer v = markov_number(o.k, r, parse_method(o.method));
    switch (ctx.format) {
        case Format::Text: ctx.out << v << "\n"; break;
        case Format::Csv:
            print_csv(ctx.out, {{"k", "p", "q", "value"}, {std::to_string(o.k), to_string(r.p), to_string(r.q), to_string(v)}});
            break;
        case Format::Json: {
            Json j = Json::object();
            j["k"] = std::to_string(o.k);
            j["fraction"] = r.str();
            j["method"] = o.method;
            j["value"] = to_string(v);
            ctx.out << dump(j);
        }
    }
    return kExitOk;
}

struct TreeOpts {
    unsigned k = 0;
    std::size_t depth = 3;
};

int cmd_tree(const Context& ctx, const TreeOpts& o) {
    auto entries = tree_levels(o.k, o.depth);
    if (ctx.format == Format::Json) {
        Json j = Json::object();
        j["k"] = std::to_string(o.k);
        j["depth"] = std::to_string(o.depth);
        Json nodes = Json::array();
        for (const auto& e : entries) {
            Json n = Json::object();
            n["depth"] = std::to_string(e.depth);
            n["path"] = path_str(e.path);
            n["farey"] = Json::array({e.farey.left.str(), e.farey.mid.str(), e.farey.right.str()});
            n["triple"] = Json::array({to_string(e.triple.a), to_string(e.triple.b), to_string(e.triple.c)});
            nodes.push_back(n);
        }
        j["nodes"] = nodes;
        ctx.out << dump(j);
        return kExitOk;
    }
    Rows rows;
    if (ctx.format == Format::Csv) rows.push_back({"k", "depth", "path", "p", "q", "a", "b", "c"});
    else rows.push_back({"depth", "path", "farey", "triple"});
    for (const auto& e : entries) {
        if (ctx.format == Format::Csv) {
            rows.push_back({std::to_string(o.k), std::to_string(e.depth), path_str(e.path), to_string(e.farey.mid.p),
                            to_string(e.farey.mid.q), to_string(e.triple.a), to_string(e.triple.b),
                            to_string(e.triple.c)});
        } else {
            rows.push_back({std::to_string(e.depth), path_str(e.path),
                            "(" + e.farey.left.str() + ", " + e.farey.mid.str() + ", " + e.farey.right.str() + ")",
                            "(" + to_string(e.triple.a) + ", " + to_string(e.triple.b) + ", " + to_string(e.triple.c) +
                                ")"});
        }
    }
    if (ctx.format == Format::Csv) print_csv(ctx.out, rows);
    else print_columns(ctx.out, rows);
    return kExitOk;
}

struct DistanceOpts {
    unsigned k = 0;
    std::string from;
    std::string to;
    std::string side = "left";
};

int cmd_distance(const Context& ctx, const DistanceOpts& o) {
    require_no_csv(ctx, "distance");
    LatticePoint a = parse_point(o.from), b = parse_point(o.to);
    Integer d = markov_distance(o.k, a, b, parse_side(o.side));
    if (ctx.format == Format::Text) {
        ctx.out << d << "\n";
    } else {
        Json j = Json::object();
        j["k"] = std::to_string(o.k);
        j["from"] = Json::array({to_string(a.x), to_string(a.y)});
        j["to"] = Json::array({to_string(b.x), to_string(b.y)});
        j["side"] = o.side;
        j["distance"] = to_string(d);
        ctx.out << dump(j);
    }
    return kExitOk;
}

struct LengthOpts {
    unsigned k = 0;
    std::string word;
    std::string polyline;
};

int cmd_length(const Context& ctx, const LengthOpts& o) {
    require_no_csv(ctx, "length");
    if (o.word.empty() == o.polyline.empty()) throw ValidationError("length needs exactly one of --word or --polyline");
    CrossingWord w = o.word.empty() ? crossing_word_polyline(polyline_from_json(read_json_file(o.polyline)))
                                    : word_from_json(read_json_file(o.word));
    Integer len = arc_length(w, o.k);
    if (ctx.format == Format::Text) {
        ctx.out << len << "\n";
    } else {
        Json j = Json::object();
        j["k"] = std::to_string(o.k);
        j["length"] = to_string(len);
        j["word"] = word_to_json(w);
        ctx.out << dump(j);
    }
    return kExitOk;
}

struct PosetOpts {
    std::string shape;
    std::string file;
    bool count = false;
    bool ideals = false;
    std::optional<unsigned> extend;
};

void describe_poset(const Context& ctx, const FencePoset& p) {
    if (ctx.format == Format::Json) {
        ctx.out << dump(poset_to_json(p));
        return;
    }
    Rows rows;
    rows.push_back({"size", std::to_string(p.size())});
    rows.push_back({"directions", dirs_str(p)});
    rows.push_back({"shape", shape_str(p)});
    if (p.labeled()) {
        std::string s;
        for (Label l : p.labels()) s += to_char(l);
        rows.push_back({"labels", s});
    }
    if (!p.unit_weights()) {
        std::string s;
        for (std::size_t i = 0; i < p.weights().size(); ++i) s += (i ? " " : "") + to_string(p.weights()[i]);
        rows.push_back({"weights", s});
        rows.push_back({"weighted sum", to_string(weighted_ideal_sum(p))});
    }
    if (!p.pairs().empty()) {
        std::string s;
        for (std::size_t i = 0; i < p.pairs().size(); ++i)
            s += (i ? " " : "") + std::string("(") + std::to_string(p.pairs()[i].first) + "," +
                 std::to_string(p.pairs()[i].second) + ")";
        rows.push_back({"pairs", s});
    }
    rows.push_back({"ideals", to_string(ideal_count(p))});
    print_columns(ctx.out, rows);
}

int cmd_poset(const Context& ctx, const PosetOpts& o) {
    require_no_csv(ctx, "poset");
    if (o.shape.empty() == o.file.empty()) throw ValidationError("poset needs exactly one of --shape or --file");
    FencePoset p = o.file.empty() ? poset_from_shape(parse_shape(o.shape)) : poset_from_json(read_json_file(o.file));
    if (o.count) {
        Integer n = ideal_count(p);
        if (ctx.format == Format::Text) {
            ctx.out << n << "\n";
        } else {
            Json j = Json::object();
            j["count"] = to_string(n);
            j["weighted_sum"] = to_string(weighted_ideal_sum(p));
            ctx.out << dump(j);
        }
    } else if (o.ideals) {
        auto ideals = ideals_enumerate(p);
        if (ctx.format == Format::Text) {
            for (const auto& ideal : ideals) {
                std::string s = "{";
                for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? "," : "") + std::to_string(ideal[i]);
                ctx.out << s << "}\n";
            }
        } else {
            Json all = Json::array();
            for (const auto& ideal : ideals) {
                Json e = Json::array();
                for (std::size_t i : ideal) e.push_back(std::to_string(i));
                all.push_back(e);
            }
            Json j = Json::object();
            j["count"] = std::to_string(ideals.size());
            j["ideals"] = all;
            ctx.out << dump(j);
        }
    } else if (o.extend) {
        describe_poset(ctx, extend_poset(p, *o.extend));
    } else {
        describe_poset(ctx, p);
    }
    return kExitOk;
}

int cmd_cf(const Context& ctx, const std::string& list) {
    require_no_csv(ctx, "cf");
    CFSequence seq = parse_sequence(list);
    if (!cf_admissible(seq)) throw ValidationError("continued-fraction entries must be non-negative: " + list);
    ExactFraction f = cf_eval(seq);
    if (ctx.format == Format::Text) {
        ctx.out << f.numerator << "/" << f.denominator << "\n";
    } else {
        Json j = Json::object();
        Json s = Json::array();
        for (const auto& v : seq) s.push_back(to_string(v));
        j["sequence"] = s;
        j["numerator"] = to_string(f.numerator);
        j["denominator"] = to_string(f.denominator);
        ctx.out << dump(j);
    }
    return kExitOk;
}

struct ResolveOpts {
    int type = 0;
    std::string p1;
    std::string p2;
    std::string overlap;
    std::optional<std::size_t> index;
    bool enumerate = false;
};

int cmd_resolve(const Context& ctx, const ResolveOpts& o) {
    require_no_csv(ctx, "resolve");
    FencePoset p1 = poset_from_json(read_json_file(o.p1));
    FencePoset p2 = poset_from_json(read_json_file(o.p2));
    Resolution res;
    std::optional<CrossingOverlap> ov;
    if (o.type == 0) {
        if (!o.overlap.empty()) {
            auto v = parse_indices(o.overlap, 4);
            ov = CrossingOverlap{v[0], v[1], v[2], v[3]};
        } else {
            auto all = find_crossing_overlaps(p1, p2);
            if (all.empty()) throw ValidationError("the posets have no crossing overlap");
            ov = all.front();
        }
        res = resolve_type0(p1, p2, *ov);
    } else if (o.type == 1) {
        if (!o.index) throw ValidationError("type 1 needs --index");
        res = resolve_type1(p1, p2, *o.index);
    } else {
        res = resolve_type2(p1, p2);
    }
    IdentityCheck check =
        verify_resolution_identity(p1, p2, res, o.enumerate ? CountMode::Enumeration : CountMode::Dp);
    if (ctx.format == Format::Json) {
        Json j = Json::object();
        j["type"] = std::to_string(o.type);
        if (ov)
            j["overlap"] = Json::array({std::to_string(ov->c), std::to_string(ov->d), std::to_string(ov->c2),
                                        std::to_string(ov->d2)});
        if (o.type == 1) j["index"] = std::to_string(*o.index);
        j["count_mode"] = o.enumerate ? "enumeration" : "dp";
        j.update(resolution_to_json(res, check));
        ctx.out << dump(j);
    } else {
        Rows rows;
        rows.push_back({"poset", "size", "directions", "shape", "ideals"});
        for (std::size_t i = 1; i <= 6; ++i) {
            const FencePoset& p = i == 1 ? p1 : i == 2 ? p2 : res.output(i);
            rows.push_back({"P" + std::to_string(i), std::to_string(p.size()), dirs_str(p), shape_str(p),
                            to_string(check.counts[i - 1])});
        }
        print_columns(ctx.out, rows);
        if (ov)
            ctx.out << "overlap " << ov->c << "," << ov->d << "," << ov->c2 << "," << ov->d2 << "\n";
        ctx.out << "identity " << check.lhs << (check.equal ? " = " : " != ") << check.rhs << "\n";
    }
    return check.equal ? kExitOk : kExitFailure;
}

struct VerifyOpts {
    std::vector<unsigned> ks;
    std::size_t max_q = 0;
    long min_coord = 0;
    long max_coord = 0;
    std::size_t max_n = 20;
    std::size_t samples = 1000;
    std::size_t max_h = 14;
    std::uint64_t seed = 1;
    std::string method = "tree";
};

int emit_report(const Context& ctx, const std::string& check, Json reports, bool passed) {
    Json j = Json::object();
    j["check"] = check;
    j["reports"] = std::move(reports);
    j["passed"] = passed;
    ctx.out << dump(j);
    return passed ? kExitOk : kExitFailure;
}

int cmd_verify_ptolemy(const Context& ctx, const VerifyOpts& o) {
    require_no_csv(ctx, "verify ptolemy");
    if (o.min_coord > o.max_coord) throw ValidationError("--min-coord exceeds --max-coord");
    bool passed = true;
    Json reports = Json::array();
    Rows rows{{"k", "box", "quadrilaterals", "tight", "violations", "result"}};
    for (unsigned k : o.ks) {
        PtolemyReport r = verify_ptolemy_sweep(k, o.min_coord, o.max_coord, ctx.jobs);
        passed = passed && r.passed();
        reports.push_back(ptolemy_to_json(r));
        rows.push_back({std::to_string(k),
                        "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]^2",
                        std::to_string(r.quadrilaterals), std::to_string(r.tight),
                        std::to_string(r.violations.size()), passfail(r.passed())});
        if (ctx.format == Format::Text)
            for (const auto& v : r.violations)
                rows.push_back({"", point_str(v.v[0]) + point_str(v.v[1]) + point_str(v.v[2]) + point_str(v.v[3]),
                                to_string(v.lhs) + " < " + to_string(v.rhs), "", "", ""});
    }
    if (ctx.format == Format::Json) return emit_report(ctx, "ptolemy", reports, passed);
    print_columns(ctx.out, rows);
    return passed ? kExitOk : kExitFailure;
}

int cmd_verify_aigner(const Context& ctx, const VerifyOpts& o) {
    require_no_csv(ctx, "verify aigner");
    bool passed = true;
    Json reports = Json::array();
    Rows rows{{"k", "max_q", "fixed-numerator", "fixed-denominator", "fixed-sum", "violations", "result"}};
    Rows failures;
    for (unsigned k : o.ks) {
        AignerReport r = verify_aigner(k, o.max_q, ctx.jobs);
        passed = passed && r.passed();
        reports.push_back(aigner_to_json(r));
        rows.push_back({std::to_string(k), std::to_string(r.q_max), std::to_string(r.checked[0]),
                        std::to_string(r.checked[1]), std::to_string(r.checked[2]),
                        std::to_string(r.violations.size()), passfail(r.passed())});
        for (const auto& v : r.violations)
            failures.push_back({std::to_string(k), to_string(v.family), v.smaller.str(), v.larger.str(),
                                to_string(v.m_smaller), to_string(v.m_larger)});
    }
    if (ctx.format == Format::Json) return emit_report(ctx, "aigner", reports, passed);
    print_columns(ctx.out, rows);
    if (!failures.empty()) {
        failures.insert(failures.begin(), {"k", "family", "smaller", "larger", "m_smaller", "m_larger"});
        print_columns(ctx.out, failures);
    }
    return passed ? kExitOk : kExitFailure;
}

int cmd_verify_recurrences(const Context& ctx, const VerifyOpts& o) {
    require_no_csv(ctx, "verify recurrences");
    bool passed = true;
    Json reports = Json::array();
    Rows rows{{"k", "n", "predicted", "actual", "result"}};
    for (unsigned k : o.ks) {
        RecurrenceReport r = verify_recurrences(k, o.max_n, parse_method(o.method));
        passed = passed && r.passed();
        reports.push_back(recurrences_to_json(r));
        for (const auto& row : r.rows)
            rows.push_back({std::to_string(k), std::to_string(row.n), to_string(row.predicted), to_string(row.actual),
                            passfail(row.holds)});
    }
    if (ctx.format == Format::Json) return emit_report(ctx, "recurrences", reports, passed);
    print_columns(ctx.out, rows);
    return passed ? kExitOk : kExitFailure;
}

int cmd_verify_identities(const Context& ctx, const VerifyOpts& o) {
    require_no_csv(ctx, "verify identities");
    std::vector<SweepResult> results;
    results.push_back(sweep_ideal_exhaustive(o.max_h));
    results.push_back(sweep_ideal_random(o.seed, o.samples, 1, std::max<std::size_t>(o.max_h, 18), ctx.jobs));
    results.push_back(sweep_numerator_skein(o.seed, 10, 5, ctx.jobs));
    for (int type = 0; type <= 2; ++type)
        results.push_back(
            sweep_resolutions(type, o.seed, o.samples, std::min<std::size_t>(o.max_h, 12), CountMode::Enumeration,
                              ctx.jobs));
    for (unsigned k : o.ks) {
        results.push_back(sweep_tree_vs_poset(k, o.max_q, ctx.jobs));
        results.push_back(sweep_weighted_extension(k, o.max_q, ctx.jobs));
        results.push_back(sweep_near_palindromic(k, o.max_q, ctx.jobs));
        results.push_back(sweep_left_right(k, o.max_coord, ctx.jobs));
        results.push_back(sweep_translation(k, o.max_coord, ctx.jobs));
    }
    bool passed = std::all_of(results.begin(), results.end(), [](const SweepResult& r) { return r.passed(); });
    if (ctx.format == Format::Json) {
        Json reports = Json::array();
        for (const auto& r : results) reports.push_back(sweep_to_json(r));
        return emit_report(ctx, "identities", reports, passed);
    }
    Rows rows{{"result", "checked", "failures", "property"}};
    for (const auto& r : results)
        rows.push_back({passfail(r.passed()), std::to_string(r.checked), std::to_string(r.failures), r.name});
    print_columns(ctx.out, rows);
    for (const auto& r : results)
        for (const auto& s : r.samples) ctx.out << "  " << r.name << ": " << s << "\n";
    return passed ? kExitOk : kExitFailure;
}

struct CompareOpts {
    unsigned k = 0;
    unsigned k2 = 1;
    std::size_t max_q = 15;
};

void print_collisions(std::ostream& out, unsigned k, const std::vector<Collision>& cs) {
    out << "collisions k=" << k << ": " << cs.size() << "\n";
    for (const auto& c : cs) {
        out << "  " << c.value << ":";
        for (const auto& f : c.fractions) out << " " << f.str();
        out << "\n";
    }
}

int cmd_compare_orders(const Context& ctx, const CompareOpts& o) {
    require_no_csv(ctx, "compare-orders");
    OrderComparison c = compare_orders(o.k, o.k2, o.max_q, ctx.jobs);
    if (ctx.format == Format::Json) {
        ctx.out << dump(compare_orders_to_json(c));
        return kExitOk;
    }
    ctx.out << "k=" << c.k << " k2=" << c.k2 << " max_q=" << c.q_max << " fractions=" << c.fractions
            << " pairs=" << c.pairs << " discordant=" << c.discordant.size() << "\n";
    if (!c.discordant.empty()) {
        Rows rows{{"a", "b", "m_k(a)", "m_k(b)", "m_k2(a)", "m_k2(b)"}};
        for (const auto& d : c.discordant)
            rows.push_back({d.a.str(), d.b.str(), to_string(d.m_k_a), to_string(d.m_k_b), to_string(d.m_k2_a),
                            to_string(d.m_k2_b)});
        print_columns(ctx.out, rows);
    }
    print_collisions(ctx.out, c.k, c.collisions_k);
    print_collisions(ctx.out, c.k2, c.collisions_k2);
    return kExitOk;
}

struct TableOpts {
    unsigned k = 0;
    std::size_t max_q = 12;
    std::string method = "tree";
};

int cmd_table(const Context& ctx, const TableOpts& o) {
    auto rows_in = markov_table(o.k, o.max_q, parse_method(o.method), ctx.jobs);
    if (ctx.format == Format::Json) {
        Json rows = Json::array();
        for (const auto& r : rows_in) {
            Json e = Json::object();
            e["p"] = to_string(r.r.p);
            e["q"] = to_string(r.r.q);
            e["value"] = to_string(r.value);
            rows.push_back(e);
        }
        Json j = Json::object();
        j["k"] = std::to_string(o.k);
        j["max_q"] = std::to_string(o.max_q);
        j["rows"] = rows;
        ctx.out << dump(j);
        return kExitOk;
    }
    Rows rows{{"k", "p", "q", "value"}};
    for (const auto& r : rows_in)
        rows.push_back({std::to_string(o.k), to_string(r.r.p), to_string(r.r.q), to_string(r.value)});
    if (ctx.format == Format::Csv) print_csv(ctx.out, rows);
    else print_columns(ctx.out, rows);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact k-Markov numbers, fence posets and lattice arcs", "kmarkov"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "text";
    unsigned jobs = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", jobs, "Worker threads (default: KMARKOV_JOBS or all cores)");

    const auto methods = CLI::IsMember({"tree", "poset", "both"});
    const auto sides = CLI::IsMember({"left", "right"});

    NumberOpts number;
    auto* sub_number = app.add_subcommand("number", "m^(k) of a reduced fraction in [0,1]");
    sub_number->add_option("--k", number.k, "Parameter k")->required();
    sub_number->add_option("fraction", number.fraction, "P/Q")->required();
    sub_number->add_option("--method", number.method, "tree, poset or both")->check(methods);

    TreeOpts tree;
    auto* sub_tree = app.add_subcommand("tree", "Levels of the k-Markov tree over [0,1]");
    sub_tree->add_option("--k", tree.k, "Parameter k")->required();
    sub_tree->add_option("--depth", tree.depth, "Deepest level (the [0,1] root is level 1)");

    DistanceOpts distance;
    auto* sub_distance = app.add_subcommand("distance", "k-Markov distance between lattice points");
    sub_distance->add_option("--k", distance.k, "Parameter k")->required();
    sub_distance->add_option("--from", distance.from, "X,Y")->required();
    sub_distance->add_option("--to", distance.to, "X,Y")->required();
    sub_distance->add_option("--side", distance.side, "Bias of the straight arc")->check(sides);

    LengthOpts length;
    auto* sub_length = app.add_subcommand("length", "k-Markov length of an arc");
    sub_length->add_option("--k", length.k, "Parameter k")->required();
    auto* opt_word = sub_length->add_option("--word", length.word, "Crossing word JSON file");
    auto* opt_poly = sub_length->add_option("--polyline", length.polyline, "Polyline arc JSON file");
    opt_word->excludes(opt_poly);

    PosetOpts poset;
    unsigned extend_k = 0;
    auto* sub_poset = app.add_subcommand("poset", "Fence poset queries");
    auto* opt_shape = sub_poset->add_option("--shape", poset.shape, "Shape a1,...,an");
    auto* opt_file = sub_poset->add_option("--file", poset.file, "Poset JSON file");
    opt_shape->excludes(opt_file);
    auto* opt_count = sub_poset->add_flag("--count", poset.count, "Number of order ideals");
    auto* opt_ideals = sub_poset->add_flag("--ideals", poset.ideals, "List the order ideals");
    auto* opt_extend = sub_poset->add_option("--extend", extend_k, "Extended poset for parameter K");
    opt_count->excludes(opt_ideals)->excludes(opt_extend);
    opt_ideals->excludes(opt_extend);

    std::string cf_list;
    auto* sub_cf = app.add_subcommand("cf", "Evaluate a finite continued fraction");
    sub_cf->add_option("list", cf_list, "a1,...,an")->required();

    ResolveOpts resolve;
    std::size_t resolve_index = 0;
    auto* sub_resolve = app.add_subcommand("resolve", "Skein resolution of two fence posets");
    sub_resolve->add_option("--type", resolve.type, "0, 1 or 2")->required()->check(CLI::Range(0, 2));
    sub_resolve->add_option("--p1", resolve.p1, "First poset JSON file")->required();
    sub_resolve->add_option("--p2", resolve.p2, "Second poset JSON file")->required();
    auto* opt_overlap = sub_resolve->add_option("--overlap", resolve.overlap, "c,d,c',d' (type 0)");
    auto* opt_index = sub_resolve->add_option("--index", resolve_index, "i (type 1)");
    opt_overlap->excludes(opt_index);
    sub_resolve->add_flag("--enumerate", resolve.enumerate, "Count ideals by enumeration");

    auto* sub_verify = app.add_subcommand("verify", "Run a verification sweep");
    sub_verify->require_subcommand(1);
    VerifyOpts vo;
    std::string ks_text;
    auto add_common = [&](CLI::App* s, const std::string& default_ks) {
        s->add_option("--k", ks_text, "Comma-separated k values (default " + default_ks + ")");
        s->add_option("--seed", vo.seed, "Seed for randomized sweeps");
    };
    auto* v_aigner = sub_verify->add_subcommand("aigner", "Aigner monotonicity families");
    add_common(v_aigner, "0,1,2,3");
    v_aigner->add_option("--max-q", vo.max_q, "Largest denominator (default 30)");
    auto* v_ptolemy = sub_verify->add_subcommand("ptolemy", "Ptolemy inequality over convex quadrilaterals");
    add_common(v_ptolemy, "0");
    v_ptolemy->add_option("--min-coord", vo.min_coord, "Smallest coordinate (default 0)");
    v_ptolemy->add_option("--max-coord", vo.max_coord, "Largest coordinate (default 4)");
    auto* v_rec = sub_verify->add_subcommand("recurrences", "m_{1/n} recurrences for k = 0, 1");
    add_common(v_rec, "0,1");
    v_rec->add_option("--max-n", vo.max_n, "Largest n (default 20)");
    v_rec->add_option("--method", vo.method, "tree, poset or both")->check(methods);
    auto* v_ident = sub_verify->add_subcommand("identities", "Counting identities and arc properties");
    add_common(v_ident, "1,2,3");
    v_ident->add_option("--max-q", vo.max_q, "Largest denominator for arc sweeps (default 12)");
    v_ident->add_option("--max-coord", vo.max_coord, "Box radius for translation and reversal (default 12)");
    v_ident->add_option("--max-h", vo.max_h, "Exhaustive poset size bound (default 14)");
    v_ident->add_option("--samples", vo.samples, "Random samples per sweep (default 1000)");

    CompareOpts cmp;
    auto* sub_cmp = app.add_subcommand("compare-orders", "Compare the orderings of m^(k) and m^(k2)");
    sub_cmp->add_option("--k", cmp.k, "First parameter")->required();
    sub_cmp->add_option("--k2", cmp.k2, "Second parameter")->required();
    sub_cmp->add_option("--max-q", cmp.max_q, "Largest denominator (default 15)");

    TableOpts table;
    auto* sub_table = app.add_subcommand("table", "Table of m^(k)_{p/q} for q <= max-q");
    sub_table->add_option("--k", table.k, "Parameter k")->required();
    sub_table->add_option("--max-q", table.max_q, "Largest denominator (default 12)");
    sub_table->add_option("--method", table.method, "tree, poset or both")->check(methods);

    for (auto* s : app.get_subcommands([](CLI::App*) { return true; })) s->fallthrough();
    for (auto* s : sub_verify->get_subcommands([](CLI::App*) { return true; })) s->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Context ctx{out, err, format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text,
                    resolve_jobs(jobs)};
        if (*sub_number) return cmd_number(ctx, number);
        if (*sub_tree) return cmd_tree(ctx, tree);
        if (*sub_distance) return cmd_distance(ctx, distance);
        if (*sub_length) return cmd_length(ctx, length);
        if (*sub_poset) {
            if (*opt_extend) poset.extend = extend_k;
            return cmd_poset(ctx, poset);
        }
        if (*sub_cf) return cmd_cf(ctx, cf_list);
        if (*sub_resolve) {
            if (*opt_index) resolve.index = resolve_index;
            if (resolve.type != 0 && *opt_overlap) throw ValidationError("--overlap applies to type 0 only");
            if (resolve.type != 1 && *opt_index) throw ValidationError("--index applies to type 1 only");
            return cmd_resolve(ctx, resolve);
        }
        if (*sub_verify) {
            auto ks_or = [&](std::vector<unsigned> dflt) {
                if (ks_text.empty()) return dflt;
                std::vector<unsigned> ks;
                for (const auto& v : parse_sequence(ks_text)) {
                    if (v < 0 || v > 1000) throw ValidationError("k out of range: " + to_string(v));
                    ks.push_back(static_cast<unsigned>(v.get_ui()));
                }
                return ks;
            };
            if (*v_aigner) {
                vo.ks = ks_or({0, 1, 2, 3});
                if (vo.max_q == 0) vo.max_q = 30;
                return cmd_verify_aigner(ctx, vo);
            }
            if (*v_ptolemy) {
                vo.ks = ks_or({0});
                if (!*v_ptolemy->get_option("--max-coord")) vo.max_coord = 4;
                return cmd_verify_ptolemy(ctx, vo);
            }
            if (*v_rec) {
                vo.ks = ks_or({0, 1});
                return cmd_verify_recurrences(ctx, vo);
            }
            vo.ks = ks_or({1, 2, 3});
            if (vo.max_q == 0) vo.max_q = 12;
            if (!*v_ident->get_option("--max-coord")) vo.max_coord = 12;
            return cmd_verify_identities(ctx, vo);
        }
        if (*sub_cmp) return cmd_compare_orders(ctx, cmp);
        if (*sub_table) return cmd_table(ctx, table);
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace kmarkov::cli
