#include "cycov/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cycov/conemetrics.hpp"
#include "cycov/covers.hpp"
#include "cycov/exactmath.hpp"
#include "cycov/lifts.hpp"
#include "cycov/periods.hpp"
#include "cycov/polyhedra.hpp"
#include "cycov/wronski.hpp"

namespace cycov {

using nlohmann::json;

const std::vector<CommandInfo>& command_table()
{
    static const std::vector<CommandInfo> table = {
        {"enumerate", "list inequivalent covers up to a genus",
         {"covers.enumerate", "covers.normalize", "covers.degree_bounds"}},
        {"info", "validate a cover, genus two ways, normal forms, loop lifts",
         {"covers.validate", "covers.genus", "covers.genus_oracle", "covers.normalize", "covers.degree_bounds",
          "covers.lift_closure"}},
        {"admissible", "admissible cone metrics, divisors and relations",
         {"conemetrics.all_admissible", "conemetrics.is_admissible_oracle", "conemetrics.divisor_of",
          "conemetrics.count_checks", "conemetrics.involution_pairing", "conemetrics.monomial_relations"}},
        {"wronski", "Weierstrass weights from the Wronskian",
         {"wronski.wronskian", "wronski.total_weight", "wronski.hyperelliptic_test", "exactmath.rational_roots",
          "exactmath.order_at"}},
        {"lifts", "lifts of an index map to the cover",
         {"lifts.compatible_mus", "lifts.affine_order", "lifts.lift_order", "lifts.preimage_action"}},
        {"graphs", "symmetric quotient graph parameters", {"polyhedra.quotient_graph_params"}},
        {"catalog", "regular triply periodic polyhedral surfaces",
         {"polyhedra.catalog", "polyhedra.tiling_genus"}},
        {"periods", "Jacobian and coefficient solve for a period matrix",
         {"periods.jacobian", "periods.solve_coefficients"}},
        {"exact", "exact rational-function operations",
         {"exactmath.derivative", "exactmath.log_derivative", "exactmath.order_at", "exactmath.rational_roots"}},
        {"selfcheck", "golden tables, oracle, weight, census and catalog suites",
         {"covers.enumerate", "covers.genus_oracle", "wronski.total_weight", "conemetrics.count_checks",
          "polyhedra.catalog"}},
    };
    return table;
}

const std::vector<std::string>& module_operations()
{
    static const std::vector<std::string> ops = {
        "exactmath.derivative",        "exactmath.log_derivative",          "exactmath.order_at",
        "exactmath.rational_roots",    "covers.validate",                   "covers.genus",
        "covers.genus_oracle",         "covers.degree_bounds",              "covers.normalize",
        "covers.enumerate",            "covers.lift_closure",               "conemetrics.all_admissible",
        "conemetrics.is_admissible_oracle", "conemetrics.divisor_of",       "conemetrics.count_checks",
        "conemetrics.involution_pairing", "conemetrics.monomial_relations", "wronski.wronskian",
        "wronski.total_weight",        "wronski.hyperelliptic_test",        "lifts.compatible_mus",
        "lifts.affine_order",          "lifts.lift_order",                  "lifts.preimage_action",
        "polyhedra.quotient_graph_params", "polyhedra.tiling_genus",        "polyhedra.catalog",
        "periods.jacobian",            "periods.solve_coefficients",
    };
    return ops;
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

long parse_long(const std::string& s)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    }
    catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

std::vector<long> parse_longs(const std::string& s)
{
    std::vector<long> out;
    for (const auto& t : split(s, ',')) out.push_back(parse_long(t));
    if (out.empty()) throw UsageError("empty list");
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s)
{
    std::vector<Rational> out;
    for (const auto& t : split(s, ',')) {
        try {
            out.push_back(Rational::parse(t));
        }
        catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

json rat(const Rational& r) { return r.str(); }

json rats(const std::vector<Rational>& v)
{
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

json cover_json(const BranchingData& b) { return {{"d", b.d()}, {"indices", b.indices()}}; }

json divisor_json(const Divisor& D, const BranchingData& b)
{
    json entries = json::array();
    for (const auto& [p, k] : D.entries())
        entries.push_back({{"puncture", p.puncture + 1}, {"sheet_class", p.sheet_class}, {"order", k}});
    return {{"text", D.str(b)}, {"degree", D.degree()}, {"entries", entries}};
}

std::string label_str(const PointLabel& p, const BranchingData& b)
{
    std::string s = "p" + std::to_string(p.puncture + 1);
    if (std::gcd(b.d(), b.index(p.puncture)) > 1) s += "," + std::to_string(p.sheet_class);
    return s;
}

std::string factored_w1(const WronskiReport& r)
{
    std::string s;
    for (const auto& e : r.extra_points) {
        if (!s.empty()) s += "*";
        s += "(" + e.factor.str() + ")";
        if (e.multiplicity > 1) s += "^" + std::to_string(e.multiplicity);
    }
    return s.empty() ? "1" : s;
}

// Validation failure: envelope with violations, exit 1.
struct Invalid {
    Validation v;
};

BranchingData cover_arg(long d, const std::string& idx, bool normal, json& inputs)
{
    const Indices indices = parse_longs(idx);
    inputs["d"] = d;
    inputs["indices"] = indices;
    inputs["normalize"] = normal;
    auto v = validate(d, indices);
    if (!v.ok()) throw Invalid{std::move(v)};
    return normal ? normalize(*v.data) : *v.data;
}

json envelope(const std::string& command, json inputs, json results)
{
    return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
            {"schema_version", kSchemaVersion}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cyclically branched covers of punctured spheres", "cycov"};
    app.require_subcommand(1);

    // enumerate
    long en_max = 0, en_min = 0, en_n = 0;
    std::string en_format = "json", en_eq = "dihedral";
    auto* en = app.add_subcommand("enumerate", "list inequivalent covers up to a genus");
    en->add_option("--max-genus", en_max, "largest genus")->required();
    en->add_option("--min-genus", en_min, "smallest genus (default min(3, max-genus))");
    en->add_option("--punctures", en_n, "number of punctures");
    en->add_option("--format", en_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    en->add_option("--equivalence", en_eq, "dihedral or multiset")->check(CLI::IsMember({"dihedral", "multiset"}));

    // shared cover positional arguments
    struct CoverArgs {
        long d = 0;
        std::string indices;
        bool normalize = false;
    };
    auto cover_opts = [](CLI::App* sub, CoverArgs& c) {
        sub->add_option("d", c.d, "covering degree")->required();
        sub->add_option("indices", c.indices, "comma-separated branching indices")->required();
        sub->add_flag("--normalize", c.normalize, "replace the cover by its normal form first");
    };

    CoverArgs info_c;
    std::string info_winding;
    auto* info = app.add_subcommand("info", "validate a cover and compute its genus");
    cover_opts(info, info_c);
    info->add_option("--winding", info_winding, "intersection numbers of a loop with the cuts");

    CoverArgs adm_c;
    std::string adm_check;
    int adm_degree = 2;
    auto* adm = app.add_subcommand("admissible", "admissible cone metrics and their divisors");
    cover_opts(adm, adm_c);
    adm->add_option("--check", adm_check, "run the independent oracle on this tuple");
    adm->add_option("--degree", adm_degree, "monomial degree for relation search (default 2)");

    CoverArgs wr_c;
    std::string wr_p, wr_metrics;
    auto* wr = app.add_subcommand("wronski", "Weierstrass weights via the Wronskian");
    cover_opts(wr, wr_c);
    wr->add_option("--punctures", wr_p, "comma-separated rational positions");
    wr->add_option("--metrics", wr_metrics, "basis as a1,..,an;b1,..,bn;...");

    CoverArgs li_c;
    std::string li_phi, li_target;
    long li_mu = -1, li_nu = 0;
    auto* li = app.add_subcommand("lifts", "lifts of an index map");
    cover_opts(li, li_c);
    li->add_option("--phi", li_phi, "1-based images of the punctures");
    li->add_option("--target", li_target, "target cover as d:i1,..,in");
    li->add_option("--mu", li_mu, "multiplier of a single lift to inspect");
    li->add_option("--nu", li_nu, "translation of that lift");

    long gr_g = 0;
    auto* gr = app.add_subcommand("graphs", "symmetric quotient graph parameters");
    gr->add_option("--genus", gr_g, "genus")->required();

    std::string cat_name;
    auto* cat = app.add_subcommand("catalog", "regular triply periodic polyhedral surfaces");
    cat->add_option("name", cat_name, "entry name");

    std::string per_pi, per_p;
    auto* per = app.add_subcommand("periods", "Jacobian and coefficient solve (Octa-4 fixture by default)");
    per->add_option("--pi", per_pi, "JSON file with the g x 2g period matrix");
    per->add_option("--p", per_p, "JSON file with the 3 x 2g lattice matrix");

    std::string ex_op, ex_num, ex_den = "1", ex_at;
    auto* ex = app.add_subcommand("exact", "exact rational-function operations");
    ex->add_option("op", ex_op, "derivative, log-derivative, order or roots")
        ->required()
        ->check(CLI::IsMember({"derivative", "log-derivative", "order", "roots"}));
    ex->add_option("--num", ex_num, "numerator coefficients, constant term first")->required();
    ex->add_option("--den", ex_den, "denominator coefficients, constant term first");
    ex->add_option("--at", ex_at, "point for order");

    long sc_g = 3;
    std::string sc_catalog, sc_format = "json";
    auto* sc = app.add_subcommand("selfcheck", "run the verification suites");
    sc->add_option("--max-genus", sc_g, "largest genus swept (default 3)");
    sc->add_option("--catalog", sc_catalog, "catalog JSON to check instead of the built-in one");
    sc->add_option("--format", sc_format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    json inputs = json::object();
    auto emit = [&](const std::string& cmd, json results) {
        out << envelope(cmd, inputs, std::move(results)).dump(2) << "\n";
    };
    CLI::App* active = app.get_subcommands().front();
    const std::string cmd = active->get_name();

    try {
        if (active == en) {
            if (en_max < 2) throw UsageError("--max-genus must be at least 2");
            EnumerateOptions o;
            o.max_genus = en_max;
            if (!en->count("--min-genus")) en_min = std::min<long>(3, en_max);
            if (en_min < 2 || en_min > en_max) throw UsageError("--min-genus must lie in [2, max-genus]");
            o.min_genus = en_min;
            if (en->count("--punctures")) {
                if (en_n < 3) throw UsageError("--punctures must be at least 3");
                o.punctures = en_n;
            }
            o.equivalence = en_eq == "multiset" ? Equivalence::Multiset : Equivalence::Dihedral;
            inputs = {{"max_genus", en_max}, {"min_genus", en_min}, {"equivalence", en_eq}};
            inputs["punctures"] = o.punctures ? json(*o.punctures) : json(nullptr);
            const auto covers = enumerate(o);
            if (en_format == "tsv") {
                for (const auto& c : covers) {
                    out << c.cover.d() << "\t{";
                    for (std::size_t i = 0; i < c.cover.n(); ++i) out << (i ? "," : "") << c.cover.index(i);
                    out << "}\t" << c.genus << "\n";
                }
                return kExitOk;
            }
            json rows = json::array();
            for (const auto& c : covers)
                rows.push_back({{"d", c.cover.d()}, {"indices", c.cover.indices()}, {"genus", c.genus},
                                {"n", c.cover.n()}});
            emit(cmd, {{"count", covers.size()}, {"covers", rows}});
            return kExitOk;
        }

        if (active == info) {
            const BranchingData b = cover_arg(info_c.d, info_c.indices, info_c.normalize, inputs);
            const auto s = summarize(b);
            json r = {{"valid", true},
                      {"cover", cover_json(b)},
                      {"genus", s.genus},
                      {"genus_oracle", genus_oracle(b)},
                      {"preimage_counts", s.preimage_counts},
                      {"degree_at_preimage", s.degree_at_preimage},
                      {"normal_form", cover_json(normalize(b))},
                      {"multiset_normal_form", cover_json(normalize_multiset(b))}};
            if (s.genus >= 2) {
                const auto bd = degree_bounds(s.genus, static_cast<long>(b.n()));
                r["degree_bounds"] = {{"lower", bd.lower}, {"upper", bd.upper}};
                r["within_bounds"] = b.d() >= bd.lower && b.d() <= bd.upper;
            }
            else {
                r["degree_bounds"] = nullptr;
            }
            if (!info_winding.empty()) {
                const auto w = parse_longs(info_winding);
                inputs["winding"] = w;
                const auto lc = lift_closure(b, w);
                r["lift_closure"] = {{"closed", lc.closed}, {"length_multiplier", lc.length_multiplier},
                                     {"components", lc.components}};
            }
            emit(cmd, r);
            return kExitOk;
        }

        if (active == adm) {
            const BranchingData b = cover_arg(adm_c.d, adm_c.indices, adm_c.normalize, inputs);
            inputs["degree"] = adm_degree;
            const auto metrics = all_admissible(b);
            json ms = json::array();
            for (const auto& m : metrics)
                ms.push_back({{"mu", m.mu}, {"a", m.a}, {"divisor", divisor_json(divisor_of(m), b)}});
            const auto cc = count_checks(b);
            json r = {{"cover", cover_json(b)},
                      {"metrics", ms},
                      {"count_check",
                       {{"count", cc.count}, {"genus", cc.genus}, {"exactly_g", cc.exactly_g},
                        {"at_least_g", cc.at_least_g}}}};
            if (b.n() == 3) {
                const auto ip = involution_pairing(b);
                json pairs = json::array();
                for (const auto& p : ip.pairs) pairs.push_back({{"admissible", p.admissible}, {"partner", p.non_admissible}});
                r["involution_pairing"] = {{"pairs", pairs}, {"zero_free_residues", ip.zero_free_residues},
                                           {"consistent", ip.consistent}};
            }
            if (cc.genus >= 1 && cc.at_least_g) {
                std::vector<ConeMetric> basis;
                try {
                    basis = cc.genus >= 2 ? default_basis(b) : metrics;
                }
                catch (const Error&) {
                    basis = metrics;
                }
                std::vector<Divisor> divs;
                json bj = json::array();
                for (const auto& m : basis) {
                    divs.push_back(divisor_of(m));
                    bj.push_back(m.a);
                }
                json rel = json::array();
                for (const auto& x : monomial_relations(divs, adm_degree))
                    rel.push_back({{"lhs", monomial_str(x.lhs)}, {"rhs", monomial_str(x.rhs)},
                                   {"divisor", x.divisor.str(b)}, {"rank3_candidate", x.rank3_candidate}});
                r["relation_basis"] = bj;
                r["relations"] = rel;
            }
            if (!adm_check.empty()) {
                const auto a = parse_longs(adm_check);
                inputs["check"] = a;
                r["oracle"] = {{"a", a}, {"admissible", is_admissible_oracle(b, a)}};
            }
            emit(cmd, r);
            return kExitOk;
        }

        if (active == wr) {
            const BranchingData b = cover_arg(wr_c.d, wr_c.indices, wr_c.normalize, inputs);
            const PunctureConfig pc = wr_p.empty() ? default_punctures(b.n()) : PunctureConfig{parse_rationals(wr_p)};
            inputs["punctures"] = rats(pc.p);
            std::vector<ConeMetric> basis;
            if (wr_metrics.empty()) {
                basis = default_basis(b);
            }
            else {
                for (const auto& t : split(wr_metrics, ';')) basis.push_back(make_metric(b, parse_longs(t)));
            }
            json bj = json::array();
            for (const auto& m : basis) bj.push_back(m.a);
            inputs["metrics"] = bj;
            const auto rep = wronskian(b, basis, pc);
            json extra = json::array();
            for (const auto& e : rep.extra_points)
                extra.push_back({{"factor", e.factor.str()}, {"degree", e.factor.degree()},
                                 {"root", e.root ? json(e.root->str()) : json(nullptr)},
                                 {"multiplicity", e.multiplicity}});
            json tw;
            int code = kExitOk;
            const long expected = (rep.genus - 1) * rep.genus * (rep.genus + 1);
            try {
                tw = {{"value", total_weight(rep, b, rep.genus)}, {"expected", expected}, {"ok", true}};
            }
            catch (const WeightMismatch& e) {
                tw = {{"value", e.computed()}, {"expected", e.expected()}, {"ok", false}};
                code = kExitDomain;
            }
            json r = {{"cover", cover_json(b)},
                      {"genus", rep.genus},
                      {"basis", bj},
                      {"w1", factored_w1(rep)},
                      {"w1_monic", rep.w1.str()},
                      {"w1_scalar", rat(rep.w1_scalar)},
                      {"branch_exponents", rats(rep.branch_exponents)},
                      {"b", rats(rep.b)},
                      {"weights", rep.weights},
                      {"preimage_counts", rep.preimage_counts},
                      {"extra_points", extra},
                      {"infinity_weight", rep.infinity_weight},
                      {"mobius_center", rep.mobius_center},
                      {"weight_multiset", weight_multiset(rep)},
                      {"total_weight", tw},
                      {"hyperelliptic", hyperelliptic_test(rep, rep.genus)}};
            emit(cmd, r);
            return code;
        }

        if (active == li) {
            const BranchingData b = cover_arg(li_c.d, li_c.indices, li_c.normalize, inputs);
            BranchingData target = b;
            if (!li_target.empty()) {
                const auto parts = split(li_target, ':');
                if (parts.size() != 2) throw UsageError("--target must look like d:i1,...,in");
                const long td = parse_long(parts[0]);
                const Indices ti = parse_longs(parts[1]);
                auto v = validate(td, ti);
                if (!v.ok()) throw Invalid{std::move(v)};
                target = *v.data;
                inputs["target"] = cover_json(target);
            }
            std::vector<std::size_t> phi(b.n());
            if (li_phi.empty()) {
                for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = i;
            }
            else {
                const auto raw = parse_longs(li_phi);
                if (raw.size() != b.n()) throw UsageError("--phi needs one image per puncture");
                for (std::size_t i = 0; i < raw.size(); ++i) {
                    if (raw[i] < 1 || raw[i] > static_cast<long>(b.n())) throw UsageError("--phi images are 1-based");
                    phi[i] = static_cast<std::size_t>(raw[i] - 1);
                }
            }
            json phij = json::array();
            for (auto x : phi) phij.push_back(x + 1);
            inputs["phi"] = phij;
            const IndexMap m = IndexMap::make(b, target, phi);
            json lifts = json::array();
            for (const auto& e : enumerate_lifts(m))
                lifts.push_back({{"mu", e.lift.mu}, {"nu", e.lift.nu}, {"order", e.order}, {"label_class", e.label_class}});
            json r = {{"cover", cover_json(b)},
                      {"target", cover_json(target)},
                      {"perm_order", m.perm_order()},
                      {"compatible_mus", compatible_mus(m)},
                      {"lifts", lifts}};
            if (li->count("--mu")) {
                inputs["mu"] = li_mu;
                inputs["nu"] = li_nu;
                const AffineLift lift{li_mu, li_nu, target.d()};
                json sel = {{"mu", li_mu}, {"nu", li_nu}, {"affine_order", affine_order(lift)}};
                if (m.is_endomorphism()) {
                    sel["lift_order"] = lift_order(m, lift);
                    const auto act = preimage_action(m, lift);
                    json mp = json::array(), fx = json::array(), sw = json::array();
                    for (const auto& [p, q] : act.map) mp.push_back({{"from", label_str(p, b)}, {"to", label_str(q, b)}});
                    for (const auto& p : act.fixed) fx.push_back(label_str(p, b));
                    for (const auto& [p, q] : act.swaps) sw.push_back({label_str(p, b), label_str(q, b)});
                    sel["label_action"] = {{"map", mp}, {"fixed", fx}, {"swaps", sw}};
                }
                r["selected"] = sel;
            }
            emit(cmd, r);
            return kExitOk;
        }

        if (active == gr) {
            inputs = {{"genus", gr_g}};
            if (gr_g < 2) throw UsageError("--genus must be at least 2");
            json ps = json::array();
            for (const auto& p : quotient_graph_params(gr_g)) {
                json e = p.edges ? json(*p.edges) : json(nullptr);
                ps.push_back({{"v", p.v}, {"d", p.d}, {"e", p.e}, {"graph_genus", p.e - p.v + 1}, {"edges", e}});
            }
            emit(cmd, {{"genus", gr_g}, {"params", ps}});
            return kExitOk;
        }

        if (active == cat) {
            inputs = {{"name", cat_name.empty() ? json(nullptr) : json(cat_name)}};
            std::vector<CatalogEntry> entries;
            if (cat_name.empty()) {
                entries = catalog();
            }
            else {
                auto e = lookup(cat_name);
                if (!e) {
                    err << "error: no catalog entry named '" << cat_name << "'\n";
                    return kExitDomain;
                }
                entries.push_back(*e);
            }
            json list = catalog_to_json(entries);
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const auto& s = entries[i].schlafli;
                list[i]["tiling_genus"] = tiling_genus(s.p, s.q, entries[i].fundamental_faces);
            }
            emit(cmd, {{"entries", list}, {"problems", check_catalog(entries)}});
            return kExitOk;
        }

        if (active == per) {
            PeriodMatrix pm = octa4_period_matrix();
            LatticeMatrix lat = octa4_lattice();
            auto read = [](const std::string& path) {
                std::ifstream in(path);
                if (!in) throw Error("cannot read " + path);
                try {
                    return json::parse(in);
                }
                catch (const json::exception& e) {
                    throw Error(path + ": " + e.what());
                }
            };
            if (!per_pi.empty()) pm.entries = complex_matrix_from_json(read(per_pi));
            if (!per_p.empty()) lat.entries = real_matrix_from_json(read(per_p));
            inputs = {{"pi", per_pi.empty() ? json("octa-4 fixture") : json(per_pi)},
                      {"p", per_p.empty() ? json("octa-4 fixture") : json(per_p)}};
            const auto jr = jacobian(pm);
            const auto sol = solve_coefficients(pm, lat);
            json r = {{"jacobian", to_json(jr.J)},
                      {"asymmetry", jr.asymmetry},
                      {"symmetric", jr.symmetric(kSymmetryTol)},
                      {"min_imag_eigenvalue", jr.min_imag_eigen},
                      {"positive_definite", jr.positive_definite()},
                      {"coefficients", to_json(sol.a)},
                      {"residual", sol.residual},
                      {"residual_ok", sol.residual < kResidualTol},
                      {"condition", sol.condition}};
            emit(cmd, r);
            return jr.symmetric(kSymmetryTol) && jr.positive_definite() && sol.residual < kResidualTol ? kExitOk
                                                                                                        : kExitDomain;
        }

        if (active == ex) {
            const Polynomial num(parse_rationals(ex_num));
            const Polynomial den(parse_rationals(ex_den));
            if (den.is_zero()) throw UsageError("--den must be nonzero");
            const RationalFunction f(num, den);
            inputs = {{"op", ex_op}, {"num", ex_num}, {"den", ex_den}, {"function", f.str()}};
            json r;
            if (ex_op == "derivative") {
                r = {{"result", derivative(f).str()}};
            }
            else if (ex_op == "log-derivative") {
                r = {{"result", log_derivative(f).str()}};
            }
            else if (ex_op == "order") {
                if (ex_at.empty()) throw UsageError("order needs --at");
                const auto c = parse_rationals(ex_at).at(0);
                inputs["at"] = c.str();
                r = {{"result", order_at(f, c)}};
            }
            else {
                if (!den.is_constant()) throw UsageError("roots needs a polynomial (--den constant)");
                const auto rf = rational_roots(f.num());
                json roots = json::array();
                for (const auto& x : rf.roots) roots.push_back({{"root", x.root.str()}, {"multiplicity", x.multiplicity}});
                r = {{"roots", roots}, {"cofactor", rf.cofactor.str()}, {"scalar", rf.scalar.str()}};
            }
            emit(cmd, r);
            return kExitOk;
        }

        if (active == sc) {
            SelfcheckOptions o;
            o.max_genus = sc_g;
            if (sc_g < 2) throw UsageError("--max-genus must be at least 2");
            if (!sc_catalog.empty()) o.catalog_file = sc_catalog;
            inputs = {{"max_genus", sc_g}, {"catalog", sc_catalog.empty() ? json(nullptr) : json(sc_catalog)}};
            const auto suites = run_selfcheck(o);
            bool all = true;
            json sj = json::array();
            for (const auto& s : suites) {
                all = all && s.passed;
                sj.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
            }
            if (sc_format == "text") {
                for (const auto& s : suites) out << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
            }
            else {
                emit(cmd, {{"suites", sj}, {"passed", all}});
            }
            if (!all)
                for (const auto& s : suites)
                    if (!s.passed) {
                        err << "selfcheck failed: " << s.name << ": " << s.detail << "\n";
                        break;
                    }
            return all ? kExitOk : kExitDomain;
        }
    }
    catch (const Invalid& inv) {
        json vs = json::array();
        for (const auto& v : inv.v.violations) vs.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
        emit(cmd, {{"valid", false}, {"violations", vs}, {"components", inv.v.components}});
        for (const auto& v : inv.v.violations) err << "error: " << v.message << "\n";
        return kExitDomain;
    }
    catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n" << active->help();
        return kExitUsage;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace cycov
