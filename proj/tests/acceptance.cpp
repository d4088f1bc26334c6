// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time limit.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "kmarkov/contfrac.hpp"
#include "kmarkov/lattice.hpp"
#include "kmarkov/markov.hpp"
#include "kmarkov/parallel.hpp"
#include "kmarkov/poset.hpp"
#include "kmarkov/skein.hpp"
#include "kmarkov/verify.hpp"
#include "kmarkov_cli/json_io.hpp"
#include "schema_check.hpp"

using namespace kmarkov;

namespace {

constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 1.0;
constexpr double kLimit3 = 1.0;
constexpr double kLimit4 = 60.0;
constexpr double kLimit5 = 1.0;
constexpr double kLimit6 = 120.0;
constexpr double kLimit7 = 60.0;
constexpr double kLimit8 = 600.0;
constexpr double kLimit9 = 300.0;
constexpr double kLimit10 = 1.0;
constexpr double kLimit11 = 300.0;

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok_ = false;
            if (!failures_.empty()) failures_ += "; ";
            failures_ += what;
        }
    }
    void sweep(const SweepResult& r) {
        expect(r.passed(), r.name + " (" + std::to_string(r.failures) + " failures)");
        for (const auto& s : r.samples) std::cerr << "  " << s << "\n";
    }
    Outcome done(const std::string& summary) const { return {ok_, ok_ ? summary : failures_}; }

private:
    bool ok_ = true;
    std::string failures_;
};

std::string shape_str(const FencePoset& p) {
    if (p.empty()) return "empty";
    std::string s = "[";
    for (std::size_t x : shape_of(p)) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + "]";
}

Crossing cr(Label l, Bias b, std::optional<Turn> t = std::nullopt) { return Crossing{l, b, t}; }

Outcome criterion1() {
    Checker c;
    auto n = [](std::initializer_list<long> xs) {
        CFSequence s;
        for (long x : xs) s.emplace_back(x);
        return cf_numerator(s);
    };
    c.expect(n({3, 2, 2}) == 17, "N[3,2,2]");
    c.expect(n({2, 1, 2}) == 8, "N[2,1,2]");
    c.expect(n({1, 1, 1, 1, 3, 2, 2}) == 100, "N[1,1,1,1,3,2,2]");
    c.expect(n({2, 2, 2}) == 12, "N[2,2,2]");
    c.expect(n({3}) == 3, "N[3]");
    return c.done("17, 8, 100, 12, 3");
}

Outcome criterion2() {
    Checker c;
    FencePoset p1 = poset_from_shape({3, 2, 2}), p2 = poset_from_shape({2, 1, 2});
    Resolution r0 = resolve_type0(p1, p2, {2, 4, 1, 3});
    IdentityCheck i0 = verify_resolution_identity(p1, p2, r0, CountMode::Enumeration);
    c.expect(i0.equal && i0.lhs == 136, "type 0 identity");
    c.expect(i0.counts[2] == 11 && i0.counts[3] == 12 && i0.counts[4] == 1 && i0.counts[5] == 4, "type 0 counts");
    c.expect(shape_str(r0.p3) == "[3,1,2]" && shape_str(r0.p4) == "[2,2,2]" && r0.p5.empty() &&
                 shape_str(r0.p6) == "[4]",
             "type 0 shapes");
    Resolution r2 = resolve_type2(p1, p2);
    IdentityCheck i2 = verify_resolution_identity(p1, p2, r2, CountMode::Enumeration);
    c.expect(i2.equal && i2.lhs == 136, "type 2 identity");
    c.expect(shape_str(r2.p3) == "[1,1,1,1,3,2,2]" && r2.p4.empty() && shape_str(r2.p5) == "[2,2,2]" &&
                 shape_str(r2.p6) == "[3]",
             "type 2 shapes");
    return c.done("17*8 = 11*12 + 1*4 = 136; 17*8 = 100*1 + 12*3 = 136");
}

Outcome criterion3() {
    Checker c;
    std::multiset<Integer> got, expected{13, 61, 217, 291, 4683, 16693, 3673};
    for (const auto& e : tree_levels(1, 3)) got.insert(e.triple.b);
    c.expect(got == expected, "depth-3 middle entries");
    return c.done("{13, 61, 217, 291, 4683, 16693, 3673}");
}

Outcome criterion4(unsigned jobs) {
    Checker c;
    std::uint64_t checked = 0;
    for (unsigned k = 0; k <= 3; ++k) {
        SweepResult r = sweep_tree_vs_poset(k, 12, jobs);
        checked += r.checked;
        c.sweep(r);
    }
    return c.done(std::to_string(checked) + " fractions, 0 mismatches");
}

Outcome criterion5() {
    Checker c;
    CrossingWord g1{cr(Label::X, Bias::NearRight), cr(Label::Y, Bias::Midpoint, Turn::SharedRight),
                    cr(Label::X, Bias::NearLeft, Turn::SharedLeft)};
    CrossingWord g2{cr(Label::X, Bias::NearLeft), cr(Label::Y, Bias::Midpoint, Turn::SharedRight),
                    cr(Label::X, Bias::NearRight, Turn::SharedLeft)};
    Integer l1 = arc_length(g1, 2), l2 = arc_length(g2, 2);
    c.expect(l1 == 25, "l2(gamma1) = " + to_string(l1));
    c.expect(l2 == 49, "l2(gamma2) = " + to_string(l2));
    return c.done("l2(gamma1) = 25, l2(gamma2) = 49");
}

Outcome criterion6(unsigned jobs) {
    Checker c;
    c.sweep(sweep_ideal_exhaustive(14));
    c.sweep(sweep_ideal_random(kSeed, 1000, 1, 18, jobs));
    for (int type = 0; type <= 2; ++type) c.sweep(sweep_resolutions(type, kSeed, 1000, 12, CountMode::Enumeration, jobs));
    c.sweep(sweep_numerator_skein(kSeed, 10, 5, jobs));
    return c.done("h <= 14 exhaustive, 1000 weighted, 3 x 1000 resolutions, a,b,c in [0,10]");
}

Outcome criterion7(unsigned jobs) {
    Checker c;
    for (unsigned k = 1; k <= 3; ++k) {
        c.sweep(sweep_weighted_extension(k, 12, jobs));
        c.sweep(sweep_near_palindromic(k, 12, jobs));
        c.sweep(sweep_left_right(k, 12, jobs));
        c.sweep(sweep_translation(k, 12, jobs));
    }
    return c.done("k in {1,2,3}, q <= 12, vectors in [-12,12]^2");
}

Outcome criterion8(unsigned jobs) {
    Checker c;
    std::ostringstream s;
    for (unsigned k = 0; k <= 2; ++k) {
        PtolemyReport r = verify_ptolemy_sweep(k, 0, 4, jobs);
        c.expect(r.passed() && r.quadrilaterals > 0, "k=" + std::to_string(k) + ": " +
                                                         std::to_string(r.violations.size()) + " violations");
        s << (k ? ", " : "") << "k=" << k << ": " << r.quadrilaterals << " quads";
    }
    return c.done(s.str() + ", 0 violations");
}

Outcome criterion9(unsigned jobs) {
    Checker c;
    std::uint64_t checked = 0;
    for (unsigned k = 0; k <= 3; ++k) {
        AignerReport r = verify_aigner(k, 30, jobs);
        checked += r.checked[0] + r.checked[1] + r.checked[2];
        c.expect(r.passed() && r.checked[0] && r.checked[1] && r.checked[2],
                 "k=" + std::to_string(k) + ": " + std::to_string(r.violations.size()) + " violations");
    }
    return c.done(std::to_string(checked) + " comparisons, 0 violations");
}

Outcome criterion10() {
    Checker c;
    for (unsigned k = 0; k <= 1; ++k) {
        RecurrenceReport r = verify_recurrences(k, 20, Method::Tree);
        c.expect(r.passed() && r.rows.size() == 18, "k=" + std::to_string(k));
    }
    return c.done("k=0 and k=1, n <= 20");
}

Outcome criterion11(unsigned jobs) {
    Checker c;
    std::ostringstream s;
    s << "collisions (k<=3, q<=30):";
    for (unsigned k = 0; k <= 3; ++k) s << " " << find_collisions(k, 30, jobs).size();
    OrderComparison cmp = compare_orders(0, 1, 15, jobs);
    cli::Json report = cli::compare_orders_to_json(cmp);
    std::ifstream in(std::string(KMARKOV_TEST_DATA) + "/compare_orders.schema.json");
    schema::Json sch = schema::Json::parse(in);
    auto errors = schema::validate(sch, schema::Json::parse(cli::dump(report)));
    for (const auto& e : errors) std::cerr << "  schema: " << e << "\n";
    c.expect(errors.empty(), "compare_orders report is not schema-valid");
    s << "; compare_orders(0,1,15): " << cmp.discordant.size() << " discordant of " << cmp.pairs
      << " pairs, schema-valid";
    return c.done(s.str());
}

}  // namespace

int main() {
    const unsigned jobs = resolve_jobs(0);
    struct Criterion {
        int id;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, kLimit1, criterion1},
        {2, kLimit2, criterion2},
        {3, kLimit3, criterion3},
        {4, kLimit4, [&] { return criterion4(jobs); }},
        {5, kLimit5, criterion5},
        {6, kLimit6, [&] { return criterion6(jobs); }},
        {7, kLimit7, [&] { return criterion7(jobs); }},
        {8, kLimit8, [&] { return criterion8(jobs); }},
        {9, kLimit9, [&] { return criterion9(jobs); }},
        {10, kLimit10, criterion10},
        {11, kLimit11, [&] { return criterion11(jobs); }},
    };
    bool all = true;
    for (const auto& cr : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < cr.limit;
        bool pass = o.ok && in_time;
        all = all && pass;
        std::cout << "criterion " << std::setw(2) << cr.id << ": " << (pass ? "PASS" : "FAIL") << "  " << o.detail
                  << (in_time ? "" : "  [over time limit]") << "  (" << std::fixed << std::setprecision(3) << secs
                  << " s, limit " << std::setprecision(0) << cr.limit << " s)\n"
                  << std::flush;
    }
    return all ? 0 : 1;
}
