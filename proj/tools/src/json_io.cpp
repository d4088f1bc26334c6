#include "kmarkov_cli/json_io.hpp"

#include <fstream>
#include <sstream>

namespace kmarkov::cli {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

[[noreturn]] void bad(const std::string& what) { throw ValidationError("json: " + what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
    return j.at(key);
}

std::string text_of(const Json& v, const char* what) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    bad(std::string(what) + " must be a string or an integer");
}

Integer integer_of(const Json& v, const char* what) { return parse_integer(text_of(v, what)); }

std::size_t index_of(const Json& v, const char* what) {
    Integer i = integer_of(v, what);
    if (i < 0 || !i.fits_ulong_p()) bad(std::string(what) + " out of range");
    return i.get_ui();
}

const char* bias_name(Bias b) {
    switch (b) {
        case Bias::NearLeft: return "left";
        case Bias::NearRight: return "right";
        case Bias::Midpoint: return "mid";
    }
    return "?";
}

Bias bias_from(const std::string& s) {
    if (s == "left") return Bias::NearLeft;
    if (s == "right") return Bias::NearRight;
    if (s == "mid") return Bias::Midpoint;
    bad("unknown bias \"" + s + "\"");
}

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

Side side_from(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    bad("unknown side \"" + s + "\"");
}

Json point_json(const LatticePoint& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json fraction_json(const Fraction& f) { return f.str(); }

}  // namespace

Json poset_to_json(const FencePoset& p) {
    Json j = Json::object();
    j["size"] = str(p.size());
    Json dirs = Json::array();
    for (Dir d : p.directions()) dirs.push_back(std::string(1, to_char(d)));
    j["directions"] = dirs;
    if (p.labeled()) {
        Json labels = Json::array();
        for (Label l : p.labels()) labels.push_back(std::string(1, to_char(l)));
        j["labels"] = labels;
    }
    if (!p.unit_weights()) {
        Json weights = Json::array();
        for (const auto& w : p.weights()) weights.push_back(to_string(w));
        j["weights"] = weights;
    }
    if (!p.pairs().empty()) {
        Json pairs = Json::array();
        for (const auto& [a, b] : p.pairs()) pairs.push_back(Json::array({str(a), str(b)}));
        j["pairs"] = pairs;
    }
    return j;
}

FencePoset poset_from_json(const Json& j) {
    if (!j.is_object()) bad("poset must be an object");
    const Json& dj = member(j, "directions");
    if (!dj.is_array()) bad("\"directions\" must be an array");
    std::vector<Dir> dirs;
    for (const auto& d : dj) {
        std::string s = d.is_string() ? d.get<std::string>() : "";
        if (s == "U") dirs.push_back(Dir::Up);
        else if (s == "D") dirs.push_back(Dir::Down);
        else bad("directions must be \"U\" or \"D\"");
    }
    std::size_t h = dirs.size() + 1;
    if (j.contains("size")) {
        h = index_of(j.at("size"), "size");
        if (!(h == dirs.size() + 1 || (h == 0 && dirs.empty()))) bad("size does not match directions");
    }
    FencePoset p = h == 0 ? FencePoset() : FencePoset(std::move(dirs));
    if (j.contains("labels")) {
        std::vector<Label> labels;
        for (const auto& l : j.at("labels")) {
            if (!l.is_string() || l.get<std::string>().size() != 1) bad("labels must be \"x\", \"y\" or \"z\"");
            labels.push_back(label_from_char(l.get<std::string>()[0]));
        }
        p.set_labels(std::move(labels));
    }
    if (j.contains("weights")) {
        std::vector<Rational> weights;
        for (const auto& w : j.at("weights")) weights.push_back(parse_rational(text_of(w, "weight")));
        p.set_weights(std::move(weights));
    }
    if (j.contains("pairs")) {
        std::vector<ElementPair> pairs;
        for (const auto& pr : j.at("pairs")) {
            if (!pr.is_array() || pr.size() != 2) bad("pairs must be [i, i+1] arrays");
            pairs.emplace_back(index_of(pr[0], "pair index"), index_of(pr[1], "pair index"));
        }
        p.set_pairs(std::move(pairs));
    }
    return p;
}

Json word_to_json(const CrossingWord& w) {
    Json out = Json::array();
    for (const auto& c : w) {
        Json e = Json::object();
        e["label"] = std::string(1, to_char(c.label));
        e["bias"] = bias_name(c.bias);
        if (c.turn) e["turn"] = *c.turn == Turn::SharedRight ? "right" : "left";
        else e["turn"] = nullptr;
        out.push_back(e);
    }
    return out;
}

CrossingWord word_from_json(const Json& j) {
    if (!j.is_array()) bad("crossing word must be an array");
    CrossingWord w;
    for (const auto& e : j) {
        const Json& lj = member(e, "label");
        if (!lj.is_string() || lj.get<std::string>().size() != 1) bad("label must be \"x\", \"y\" or \"z\"");
        const Json& bj = member(e, "bias");
        if (!bj.is_string()) bad("bias must be a string");
        Crossing c;
        c.label = label_from_char(lj.get<std::string>()[0]);
        c.bias = bias_from(bj.get<std::string>());
        if (e.contains("turn") && !e.at("turn").is_null()) {
            const Json& tj = e.at("turn");
            std::string t = tj.is_string() ? tj.get<std::string>() : "";
            if (t == "right") c.turn = Turn::SharedRight;
            else if (t == "left") c.turn = Turn::SharedLeft;
            else bad("turn must be null, \"right\" or \"left\"");
        }
        w.push_back(c);
    }
    validate_word(w);
    return w;
}

Json polyline_to_json(const PolylineArc& arc) {
    Json j = Json::object();
    Json pts = Json::array();
    for (const auto& p : arc.waypoints) pts.push_back(point_json(p));
    j["waypoints"] = pts;
    Json turns = Json::array();
    for (Side s : arc.turns) turns.push_back(s == Side::Left ? "-" : "+");
    j["turns"] = turns;
    j["end_bias"] = side_name(arc.end_bias);
    return j;
}

PolylineArc polyline_from_json(const Json& j) {
    PolylineArc arc;
    for (const auto& p : member(j, "waypoints")) {
        if (!p.is_array() || p.size() != 2) bad("waypoints must be [x, y] pairs");
        arc.waypoints.push_back({integer_of(p[0], "coordinate"), integer_of(p[1], "coordinate")});
    }
    if (j.contains("turns")) {
        for (const auto& t : j.at("turns")) {
            std::string s = t.is_string() ? t.get<std::string>() : "";
            if (s == "-") arc.turns.push_back(Side::Left);
            else if (s == "+") arc.turns.push_back(Side::Right);
            else bad("turns must be \"-\" or \"+\"");
        }
    }
    if (j.contains("end_bias")) {
        if (!j.at("end_bias").is_string()) bad("end_bias must be a string");
        arc.end_bias = side_from(j.at("end_bias").get<std::string>());
    }
    if (arc.waypoints.size() < 2) bad("a polyline needs at least two waypoints");
    if (arc.turns.size() + 2 != arc.waypoints.size()) bad("a polyline with r+1 waypoints needs r-1 turns");
    return arc;
}

Json resolution_to_json(const Resolution& r, const IdentityCheck& check) {
    Json j = Json::object();
    for (std::size_t i = 3; i <= 6; ++i) {
        Json out = Json::object();
        out["poset"] = poset_to_json(r.output(i));
        Json origin = Json::array();
        for (const auto& o : r.origins[i - 3]) origin.push_back(Json::array({str(o.source), str(o.index)}));
        out["origin"] = origin;
        j["p" + std::to_string(i)] = out;
    }
    Json counts = Json::array();
    for (const auto& c : check.counts) counts.push_back(to_string(c));
    j["counts"] = counts;
    j["lhs"] = to_string(check.lhs);
    j["rhs"] = to_string(check.rhs);
    j["equal"] = check.equal;
    return j;
}

Json sweep_to_json(const SweepResult& r) {
    Json j = Json::object();
    j["name"] = r.name;
    j["checked"] = std::to_string(r.checked);
    j["failures"] = std::to_string(r.failures);
    j["samples"] = r.samples;
    j["passed"] = r.passed();
    return j;
}

Json ptolemy_to_json(const PtolemyReport& r) {
    Json j = Json::object();
    j["k"] = std::to_string(r.k);
    j["min_coord"] = std::to_string(r.lo);
    j["max_coord"] = std::to_string(r.hi);
    j["quadrilaterals"] = std::to_string(r.quadrilaterals);
    j["tight"] = std::to_string(r.tight);
    Json vs = Json::array();
    for (const auto& c : r.violations) {
        Json v = Json::object();
        Json pts = Json::array();
        for (const auto& p : c.v) pts.push_back(point_json(p));
        v["vertices"] = pts;
        v["lhs"] = to_string(c.lhs);
        v["rhs"] = to_string(c.rhs);
        vs.push_back(v);
    }
    j["violations"] = vs;
    j["passed"] = r.passed();
    return j;
}

Json aigner_to_json(const AignerReport& r) {
    Json j = Json::object();
    j["k"] = std::to_string(r.k);
    j["max_q"] = std::to_string(r.q_max);
    Json checked = Json::object();
    for (auto f : {AignerFamily::FixedNumerator, AignerFamily::FixedDenominator, AignerFamily::FixedSum})
        checked[to_string(f)] = std::to_string(r.checked[static_cast<std::size_t>(f)]);
    j["checked"] = checked;
    Json vs = Json::array();
    for (const auto& v : r.violations) {
        Json e = Json::object();
        e["family"] = to_string(v.family);
        e["smaller"] = fraction_json(v.smaller);
        e["larger"] = fraction_json(v.larger);
        e["m_smaller"] = to_string(v.m_smaller);
        e["m_larger"] = to_string(v.m_larger);
        vs.push_back(e);
    }
    j["violations"] = vs;
    j["passed"] = r.passed();
    return j;
}

Json recurrences_to_json(const RecurrenceReport& r) {
    Json j = Json::object();
    j["k"] = std::to_string(r.k);
    j["max_n"] = std::to_string(r.n_max);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json e = Json::object();
        e["n"] = std::to_string(row.n);
        e["predicted"] = to_string(row.predicted);
        e["actual"] = to_string(row.actual);
        e["holds"] = row.holds;
        rows.push_back(e);
    }
    j["rows"] = rows;
    j["passed"] = r.passed();
    return j;
}

Json collisions_to_json(const std::vector<Collision>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) {
        Json e = Json::object();
        e["value"] = to_string(c.value);
        Json fs = Json::array();
        for (const auto& f : c.fractions) fs.push_back(fraction_json(f));
        e["fractions"] = fs;
        out.push_back(e);
    }
    return out;
}

Json compare_orders_to_json(const OrderComparison& c) {
    Json j = Json::object();
    j["k"] = std::to_string(c.k);
    j["k2"] = std::to_string(c.k2);
    j["max_q"] = std::to_string(c.q_max);
    j["fractions"] = std::to_string(c.fractions);
    j["pairs"] = std::to_string(c.pairs);
    Json ds = Json::array();
    for (const auto& d : c.discordant) {
        Json e = Json::object();
        e["a"] = fraction_json(d.a);
        e["b"] = fraction_json(d.b);
        e["m_k"] = Json::array({to_string(d.m_k_a), to_string(d.m_k_b)});
        e["m_k2"] = Json::array({to_string(d.m_k2_a), to_string(d.m_k2_b)});
        ds.push_back(e);
    }
    j["discordant"] = ds;
    j["collisions_k"] = collisions_to_json(c.collisions_k);
    j["collisions_k2"] = collisions_to_json(c.collisions_k2);
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kmarkov::cli
