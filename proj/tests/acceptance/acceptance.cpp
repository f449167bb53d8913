// One line per criterion: "criterion N name: PASS|FAIL detail".
// With an argument runs only that criterion; exit status 0 iff all run pass.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cycov/cli.hpp"
#include "cycov/conemetrics.hpp"
#include "cycov/covers.hpp"
#include "cycov/lifts.hpp"
#include "cycov/periods.hpp"
#include "cycov/polyhedra.hpp"
#include "cycov/wronski.hpp"

using namespace cycov;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_time(double s)
{
    std::ostringstream o;
    o.precision(3);
    o << s << " s";
    return o.str();
}

using Row = std::tuple<long, Indices, long>;

std::string row_str(long d, const Indices& v)
{
    std::string s = std::to_string(d) + " {";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// Published list for thrice punctured spheres, genus 3 to 5.
const std::set<Row> kTriples = {
    {7, {1, 1, 5}, 3},   {7, {1, 2, 4}, 3},   {8, {1, 1, 6}, 3},   {8, {1, 2, 5}, 3},   {9, {1, 1, 7}, 4},
    {9, {1, 2, 6}, 3},   {10, {1, 1, 8}, 4},  {10, {1, 2, 7}, 4},  {11, {1, 1, 9}, 5},  {11, {1, 2, 8}, 5},
    {12, {1, 1, 10}, 5}, {12, {1, 2, 9}, 4},  {12, {1, 3, 8}, 3},  {12, {1, 4, 7}, 4},  {12, {1, 5, 6}, 3},
    {14, {1, 6, 7}, 3},  {15, {1, 4, 10}, 5}, {15, {1, 5, 9}, 4},  {16, {1, 7, 8}, 4},  {18, {1, 8, 9}, 4},
    {20, {1, 9, 10}, 5}, {22, {1, 10, 11}, 5},
};

// Printed tables, all puncture counts.
const std::map<long, std::vector<std::pair<long, Indices>>> kTables = {
    {3,
     {{7, {1, 1, 5}},
      {7, {1, 2, 4}},
      {8, {1, 1, 6}},
      {8, {1, 2, 5}},
      {9, {1, 2, 6}},
      {12, {1, 3, 8}},
      {12, {1, 5, 6}},
      {14, {1, 6, 7}},
      {4, {1, 1, 1, 1}},
      {4, {1, 1, 3, 3}},
      {6, {1, 3, 3, 5}},
      {6, {1, 3, 4, 4}},
      {3, {1, 1, 1, 1, 2}},
      {4, {1, 1, 2, 2, 2}},
      {2, {1, 1, 1, 1, 1, 1, 1, 1}}}},
    {4,
     {{9, {1, 1, 7}},
      {10, {1, 1, 8}},
      {10, {1, 2, 7}},
      {12, {1, 2, 9}},
      {12, {1, 4, 7}},
      {15, {1, 5, 9}},
      {16, {1, 7, 8}},
      {18, {1, 8, 9}},
      {4, {1, 1, 1, 2, 3}},
      {6, {1, 2, 3, 3, 3}},
      {6, {2, 2, 2, 3, 3}},
      {5, {1, 1, 1, 2}},
      {5, {1, 1, 4, 4}},
      {5, {1, 2, 3, 4}},
      {6, {1, 1, 2, 2}},
      {6, {1, 2, 4, 5}},
      {8, {1, 4, 4, 7}},
      {10, {2, 5, 5, 8}},
      {3, {1, 1, 1, 1, 1, 1}},
      {3, {1, 1, 1, 2, 2, 2}},
      {4, {1, 2, 2, 2, 2, 3}},
      {2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}}},
    {5,
     {{11, {1, 1, 9}},
      {11, {1, 2, 8}},
      {12, {1, 1, 10}},
      {15, {1, 4, 10}},
      {20, {1, 9, 10}},
      {22, {1, 10, 11}},
      {6, {1, 1, 5, 5}},
      {8, {1, 1, 2, 4}},
      {10, {1, 5, 5, 9}},
      {6, {1, 1, 3, 3, 4}},
      {6, {1, 2, 2, 3, 4}},
      {4, {1, 1, 1, 1, 2, 2}},
      {4, {1, 1, 2, 2, 3, 3}},
      {6, {2, 3, 3, 3, 3, 4}},
      {3, {1, 1, 1, 1, 1, 2, 2}},
      {4, {1, 1, 2, 2, 2, 2, 2}},
      {2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}}},
};

Outcome golden_triples()
{
    const auto t0 = Clock::now();
    std::ostringstream out, err;
    const int code = run_cli({"enumerate", "--max-genus", "5", "--punctures", "3", "--format", "tsv"}, out, err);
    const double dt = seconds_since(t0);
    if (code != 0) return {false, "enumerate exited " + std::to_string(code) + ": " + err.str()};
    std::set<Row> got;
    std::istringstream in(out.str());
    for (std::string line; std::getline(in, line);) {
        long d = 0, g = 0;
        char brace = 0;
        std::istringstream ls(line);
        std::string inner;
        ls >> d >> brace;
        std::getline(ls, inner, '}');
        ls >> g;
        Indices v;
        std::istringstream is(inner);
        for (std::string t; std::getline(is, t, ',');) v.push_back(std::stol(t));
        got.insert({d, v, g});
    }
    std::string diff;
    for (const auto& r : got)
        if (!kTriples.count(r)) diff += " unexpected " + row_str(std::get<0>(r), std::get<1>(r));
    for (const auto& r : kTriples)
        if (!got.count(r)) diff += " missing " + row_str(std::get<0>(r), std::get<1>(r));
    const bool ok = diff.empty() && dt < 60;
    return {ok, std::to_string(got.size()) + " covers, " + fmt_time(dt) + (diff.empty() ? "" : ";" + diff)};
}

Outcome golden_tables()
{
    bool ok = true;
    std::string detail;
    for (const auto& [g, rows] : kTables) {
        std::set<BranchingData> want;
        for (const auto& [d, v] : rows) want.insert(normalize_multiset(BranchingData::make(d, v)));
        std::set<BranchingData> got;
        for (const auto& c : enumerate({g, g, std::nullopt, Equivalence::Multiset})) got.insert(c.cover);
        std::string extra, missing;
        for (const auto& b : got)
            if (!want.count(b)) extra += " " + row_str(b.d(), b.indices());
        for (const auto& b : want)
            if (!got.count(b)) missing += " " + row_str(b.d(), b.indices());
        detail += "genus " + std::to_string(g) + " table " + std::to_string(want.size()) + " enumerated " +
                  std::to_string(got.size());
        if (!extra.empty()) detail += ", not in table:" + extra;
        if (!missing.empty()) detail += ", not enumerated:" + missing;
        detail += "; ";
        ok = ok && got == want;
    }
    return {ok, detail};
}

Outcome octa4_wronski()
{
    const auto t0 = Clock::now();
    const auto b = BranchingData::make(8, {1, 2, 5});
    const auto r = wronskian(b, all_admissible(b), default_punctures(3));
    const long tw = total_weight(r, b, r.genus);
    const double dt = seconds_since(t0);
    const Polynomial expected({Rational(1, 9), Rational(2, 3), Rational(1)});
    const bool ok = r.w1 == expected && r.b == std::vector<Rational>{-2, -1, -2} &&
                    r.weights == std::vector<long>{2, 2, 2} && tw == 24 && dt < 1;
    return {ok, "W1 = " + r.w1.str() + ", weights " + std::to_string(r.weights[0]) + "," +
                    std::to_string(r.weights[1]) + "," + std::to_string(r.weights[2]) + ", total " +
                    std::to_string(tw) + ", " + fmt_time(dt)};
}

Outcome octa8_census()
{
    const auto b = BranchingData::make(12, {1, 4, 7});
    const auto r = wronskian(b, all_admissible(b), default_punctures(3));
    long cone4 = 0;
    for (std::size_t i = 0; i < b.n(); ++i)
        if (r.weights[i] == 4) cone4 += r.preimage_counts[i];
    long off_points = 0, off_weight = 0, off_other = 0;
    for (const auto& e : r.extra_points) {
        const long pts = e.factor.degree() * b.d();
        if (e.multiplicity == 1) {
            off_points += pts;
            off_weight += pts;
        }
        else {
            off_other += pts;
        }
    }
    const long total = total_weight(r, b, 4);
    const bool ok = cone4 == 6 && off_points == 36 && off_weight == 36 && off_other == 0 && r.infinity_weight == 0 &&
                    total == 60 && total == 3 * 4 * 5;
    return {ok, std::to_string(cone4) + " cone points of weight 4, " + std::to_string(off_points) +
                    " points of weight 1, total " + std::to_string(total)};
}

Outcome multiplier_counts()
{
    const auto t0 = Clock::now();
    long triples = 0, all = 0;
    for (const auto& c : enumerate({5, 2, std::nullopt, Equivalence::Dihedral})) {
        const long k = static_cast<long>(all_admissible(c.cover).size());
        ++all;
        if (c.cover.n() == 3) {
            ++triples;
            if (k != c.genus)
                return {false, c.cover.str() + ": " + std::to_string(k) + " metrics, genus " + std::to_string(c.genus)};
        }
        if (k < c.genus)
            return {false, "count < g at " + c.cover.str() + ": " + std::to_string(k) + " metrics, genus " +
                               std::to_string(c.genus)};
    }
    const double dt = seconds_since(t0);
    return {dt < 30, "exactly g for " + std::to_string(triples) + " triples, >= g for all " + std::to_string(all) +
                         " covers, " + fmt_time(dt)};
}

Outcome divisor_properties()
{
    long metrics = 0;
    for (const auto& c : enumerate({5, 2, std::nullopt, Equivalence::Dihedral})) {
        for (const auto& m : all_admissible(c.cover)) {
            ++metrics;
            const auto D = divisor_of(m);
            if (D.degree() != 2 * c.genus - 2 || !D.effective())
                return {false, c.cover.str() + " metric " + D.str(c.cover) + " degree " + std::to_string(D.degree())};
        }
    }
    return {true, std::to_string(metrics) + " divisors effective of degree 2g-2"};
}

Outcome oracle_equivalence()
{
    const auto t0 = Clock::now();
    long checked = 0;
    std::string bad;
    // genus and oracle are both sums over punctures, so sorted tuples cover every ordering
    for (long d = 2; d <= 50 && bad.empty(); ++d) {
        for (long n = 3; n <= 8 && bad.empty(); ++n) {
            Indices t(static_cast<std::size_t>(n));
            std::function<void(std::size_t, long, long)> walk = [&](std::size_t pos, long lo, long sum) {
                if (!bad.empty()) return;
                if (pos + 1 == t.size()) {
                    const long x = ((-sum) % d + d) % d;
                    if (x < lo || x == 0) return;
                    t[pos] = x;
                    long gc = d;
                    for (long y : t) gc = std::gcd(gc, y);
                    if (gc != 1) return;
                    const auto b = BranchingData::make(d, t);
                    ++checked;
                    if (genus(b) != genus_oracle(b)) bad = b.str();
                    return;
                }
                for (long x = lo; x < d; ++x) {
                    t[pos] = x;
                    walk(pos + 1, x, sum + x);
                }
            };
            walk(0, 1, 0);
        }
    }
    if (!bad.empty()) return {false, "mismatch at " + bad};
    return {true, std::to_string(checked) + " covers (sorted tuples) with d <= 50, n <= 8, " +
                      fmt_time(seconds_since(t0))};
}

Outcome lift_orders()
{
    std::string fail;
    const auto octa = BranchingData::make(8, {1, 2, 5});
    const auto refl = IndexMap::make(octa, octa, {2, 1, 0});
    for (long nu = 1; nu < 8; ++nu) {
        const long want = nu % 2 ? 8 : (nu == 4 ? 2 : 4);
        const long got = lift_order(refl, {5, nu, 8});
        if (got != want) fail += " octa nu=" + std::to_string(nu) + " order " + std::to_string(got);
        const auto act = preimage_action(refl, {5, nu, 8});
        const bool swapped = act.map.at({1, 0}) == PointLabel{1, 1} && act.map.at({1, 1}) == PointLabel{1, 0};
        if (swapped != (nu % 2 == 1)) fail += " octa nu=" + std::to_string(nu) + " label action";
    }
    const auto klein = BranchingData::make(7, {1, 2, 4});
    const auto rot = IndexMap::make(klein, klein, {1, 2, 0});
    for (long nu = 0; nu < 7; ++nu)
        if (lift_order(rot, {2, nu, 7}) != 3) fail += " klein mu=2 nu=" + std::to_string(nu);
    const auto id = IndexMap::identity(klein);
    for (long nu = 1; nu < 7; ++nu)
        if (lift_order(id, {1, nu, 7}) != 7) fail += " klein mu=1 nu=" + std::to_string(nu);
    if (!fail.empty()) return {false, fail};
    return {true, "Octa-4 mu=5 orders 8/4/2 with odd-nu label swap; Klein mu=2 order 3, mu=1 order 7"};
}

Outcome graph_parameters()
{
    auto key = [](long g) {
        std::set<std::pair<long, long>> s;
        for (const auto& p : quotient_graph_params(g)) s.insert({p.v, p.d});
        return s;
    };
    const bool ok = key(3) == std::set<std::pair<long, long>>{{1, 6}, {2, 4}, {4, 3}} &&
                    key(4) == std::set<std::pair<long, long>>{{1, 8}, {2, 5}, {3, 4}, {6, 3}};
    std::string s;
    for (long g : {3L, 4L}) {
        s += "g=" + std::to_string(g) + ":";
        for (const auto& [v, d] : key(g)) s += " (" + std::to_string(v) + "," + std::to_string(d) + ")";
        s += " ";
    }
    return {ok, s};
}

Outcome divisor_relations()
{
    auto relations = [](const BranchingData& b) {
        std::vector<Divisor> ds;
        for (const auto& m : all_admissible(b)) ds.push_back(divisor_of(m));
        if (static_cast<long>(ds.size()) != genus(b)) throw Error("not a basis for " + b.str());
        return monomial_relations(ds, 2);
    };
    auto find = [](const std::vector<MonomialRelation>& rs, const std::string& l, const std::string& r) {
        for (const auto& x : rs)
            if ((monomial_str(x.lhs) == l && monomial_str(x.rhs) == r) ||
                (monomial_str(x.lhs) == r && monomial_str(x.rhs) == l))
                return &x;
        return static_cast<const MonomialRelation*>(nullptr);
    };
    auto cover_of = [](const std::string& name, const std::string& note) {
        const auto e = lookup(name);
        if (!e) throw Error("no catalog entry " + name);
        for (const auto& c : e->covers)
            if (c.note == note) return c.cover;
        throw Error("no " + note + " cover for " + name);
    };
    std::string fail;
    const auto mucube = relations(cover_of("Mucube", "sixfold"));
    const auto* m = find(mucube, "w1*w3", "w2*w2");
    if (!m || !m->rank3_candidate) fail += " Mucube w1*w3 ~ w2^2 missing";

    const auto trunc = relations(cover_of("Truncated Octa-8", ""));
    if (!find(trunc, "w1*w4", "w2*w3")) fail += " Truncated Octa-8 w1*w4 ~ w2*w3 missing";
    for (const auto& x : trunc)
        if (x.rank3_candidate) fail += " Truncated Octa-8 has square relation " + monomial_str(x.lhs) + "~" + monomial_str(x.rhs);

    const auto octa8 = relations(cover_of("Octa-8", ""));
    const auto* o = find(octa8, "w1*w4", "w3*w3");
    if (!o || !o->rank3_candidate) fail += " Octa-8 w1*w4 ~ w3^2 missing";

    if (!fail.empty()) return {false, fail};
    return {true, "Mucube w1*w3 ~ w2^2; Truncated Octa-8 w1*w4 ~ w2*w3, no square; Octa-8 w1*w4 ~ w3^2"};
}

Outcome periods()
{
    const auto t0 = Clock::now();
    const double s = std::sqrt(2.0);
    const Complex i(0, 1);
    ComplexMatrix a(3, 3);
    a << (2 + s - (4 + 3 * s) * i) / (4 + 2 * s), 0.0, (1 - s + i) / 2.0,
        0.0, 1.0, 0.0,
        (1 + s - i) / 2.0, 0.0, (1.0 + (1 - s) * i) / 2.0;
    const Complex h = (1.0 + i) / 2.0;
    ComplexMatrix J(3, 3);
    J << i, h, h,
        h, i, h,
        h, h, i;
    const auto pm = octa4_period_matrix();
    const auto sol = solve_coefficients(pm, octa4_lattice());
    const auto jr = jacobian(pm);
    const double dt = seconds_since(t0);
    const double da = (sol.a - a).cwiseAbs().maxCoeff();
    const double dj = (jr.J - J).cwiseAbs().maxCoeff();
    const bool a22 = std::abs(sol.a(1, 1) - Complex(1, 0)) < 1e-9;
    const bool ok = da < 1e-9 && a22 && dj < 1e-9 && jr.asymmetry < 1e-12 && jr.positive_definite() && dt < 1;
    std::ostringstream o;
    o << "max |a - a_ref| " << da << ", max |J - J_ref| " << dj << ", asymmetry " << jr.asymmetry
      << ", min eig Im J " << jr.min_imag_eigen << ", " << fmt_time(dt);
    return {ok, o.str()};
}

Outcome degree_bounds_check()
{
    long n_cov = 0;
    for (const auto& c : enumerate({5, 2, std::nullopt, Equivalence::Dihedral})) {
        ++n_cov;
        const auto bd = degree_bounds(c.genus, static_cast<long>(c.cover.n()));
        if (c.cover.d() < bd.lower || c.cover.d() > bd.upper)
            return {false, c.cover.str() + " outside [" + std::to_string(bd.lower) + ", " + std::to_string(bd.upper) + "]"};
    }
    // direct sweep; genus is symmetric so x <= y suffices
    constexpr long kSweep = 500;
    long max_d = 0, found = 0;
    for (long d = 2; d <= kSweep; ++d)
        for (long x = 1; x < d; ++x)
            for (long y = x; y < d; ++y) {
                const long z = ((-x - y) % d + d) % d;
                if (z == 0 || std::gcd(std::gcd(d, x), std::gcd(y, z)) != 1) continue;
                if (genus(BranchingData::make(d, {x, y, z})) != 2) continue;
                ++found;
                max_d = std::max(max_d, d);
            }
    const bool ok = max_d <= 84;
    return {ok, std::to_string(n_cov) + " enumerated covers within bounds; " + std::to_string(found) +
                    " genus-2 triples with d <= " + std::to_string(kSweep) + ", largest d " + std::to_string(max_d)};
}

struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all = {
        {1, "golden_triples", golden_triples},
        {2, "golden_tables", golden_tables},
        {3, "octa4_wronski", octa4_wronski},
        {4, "octa8_census", octa8_census},
        {5, "multiplier_counts", multiplier_counts},
        {6, "divisor_properties", divisor_properties},
        {7, "oracle_equivalence", oracle_equivalence},
        {8, "lift_orders", lift_orders},
        {9, "graph_parameters", graph_parameters},
        {10, "divisor_relations", divisor_relations},
        {11, "periods", periods},
        {12, "degree_bounds", degree_bounds_check},
    };
    std::set<int> only;
    for (int k = 1; k < argc; ++k) only.insert(std::atoi(argv[k]));
    bool ok = true;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.number)) continue;
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << c.number << " " << c.name << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail
                  << std::endl;
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
