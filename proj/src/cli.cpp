#include "k3walls/cli.hpp"

#include "k3walls/svg.hpp"
#include "k3walls/verify.hpp"

#include <algorithm>
#include <limits>

namespace k3walls {

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names{"rho",     "rho-k", "decompose", "types",     "walls",
                                                "tableaux", "chain", "verify",    "plot-walls"};
    return names;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

// Typed access to the raw flag map; every value read is echoed into `inputs`.
class Flags {
public:
    explicit Flags(const std::map<std::string, std::string>& raw) : raw_(raw) {}

    bool has(const std::string& name) const { return raw_.count(name) > 0; }

    Integer integer(const std::string& name)
    {
        Integer v = parse_integer(need(name));
        inputs[name] = int_json(v);
        return v;
    }

    int small(const std::string& name, long lo = std::numeric_limits<int>::min() / 2,
              long hi = std::numeric_limits<int>::max() / 2)
    {
        Integer v = integer(name);
        if (v < lo || v > hi)
            throw Error("out_of_range", "--" + name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return v.convert_to<int>();
    }

    int small_or(const std::string& name, int fallback, long lo, long hi)
    {
        if (!has(name)) return fallback;
        return small(name, lo, hi);
    }

    Rational rational(const std::string& name)
    {
        Rational q = parse_rational(need(name));
        inputs[name] = rational_json(q);
        return q;
    }

    MukaiVector vec(const std::string& name)
    {
        MukaiVector v = parse_vector(need(name));
        inputs[name] = to_json(v);
        return v;
    }

    StabilityType type(const std::string& name)
    {
        StabilityType t = parse_type(need(name));
        inputs[name] = to_json(t);
        return t;
    }

    std::string text(const std::string& name)
    {
        std::string s = need(name);
        inputs[name] = s;
        return s;
    }

    bool flag(const std::string& name)
    {
        if (!has(name)) return false;
        const std::string& v = raw_.at(name);
        if (v != "true" && v != "false" && v != "1" && v != "0")
            throw Error("flag_parse", "--" + name + " is a switch");
        bool on = v == "true" || v == "1";
        inputs[name] = on;
        return on;
    }

    Json inputs = Json::object();

private:
    const std::string& need(const std::string& name) const
    {
        auto it = raw_.find(name);
        if (it == raw_.end()) throw Error("missing_flag", "missing required flag --" + name);
        return it->second;
    }

    const std::map<std::string, std::string>& raw_;
};

struct Outcome {
    Json result = Json::object();
    std::vector<std::string> warnings;
    int exit_code = 0;
    std::optional<std::string> artifact;
    std::string summary;
};

Outcome cmd_rho(Flags& f)
{
    Outcome o;
    Integer g = f.integer("g"), r = f.integer("r"), d = f.integer("d");
    Integer v = rho(g, r, d);
    o.result["rho"] = int_json(v);
    o.summary = "rho = " + v.str();
    return o;
}

Outcome cmd_rho_k(Flags& f)
{
    Outcome o;
    Integer g = f.integer("g"), k = f.integer("k");
    int r = f.small("r", 0, 100000);
    Integer d = f.integer("d");
    RhoK rk = rho_k(g, k, r, d);
    o.result["rho_k"] = int_json(rk.value);
    o.result["argmax_ell"] = rk.argmax;
    o.summary = "rho_k = " + rk.value.str();
    return o;
}

Outcome cmd_decompose(Flags& f)
{
    Outcome o;
    int r = f.small("r", 0, 100000), ell = f.small("ell");
    EllDecomposition dec = ell_decompose(r, ell);
    o.result["ell"] = dec.ell;
    o.result["e"] = dec.e;
    o.result["m1"] = dec.m1;
    o.result["m2"] = dec.m2;
    o.result["type"] = to_json(BalancedType{dec.e, dec.m1, dec.m2}.to_type());
    o.result["h0_conditions"] = h0_conditions(r, ell);
    o.summary = "ell = " + std::to_string(ell) + ": e = " + std::to_string(dec.e) + ", m1 = " + std::to_string(dec.m1) +
                ", m2 = " + std::to_string(dec.m2);
    if (f.has("g") || f.has("k") || f.has("d")) {
        int g = f.small("g", 3, 1000000), k = f.small("k", 2, 1000000), d = f.small("d", -1000000, 1000000);
        Integer expected = rho(g, r - ell, d) - ell * Integer(k);
        o.result["expected_dim"] = int_json(expected);
        RhoShift id = rho_shift(g, k, d, r, ell);
        o.result["rho_shift"] = {{"lhs", int_json(id.lhs)}, {"rhs", int_json(id.rhs)}};
        SurfaceParams p(g, k);
        o.result["stratum_dim"] = int_json(stratum_dimension(p, {0, 1, 0, 1 + d - g}, BalancedType{dec.e, dec.m1, dec.m2}.to_type()));
        if (ell >= std::max(0, r + 2 - k) && d <= g - 1) {
            DegeneracyDims dd = degeneracy_dims(g, k, d, r, ell);
            o.result["degeneracy"] = {{"s", int_json(dd.s)},
                                      {"rkE", int_json(dd.rkE)},
                                      {"rkF", int_json(dd.rkF)},
                                      {"expected_dim", int_json(dd.expected_dim)}};
        } else {
            o.warnings.push_back("degeneracy dimensions need max{0,r+2-k} <= ell <= r and d <= g-1; skipped");
        }
    }
    return o;
}

Outcome cmd_types(Flags& f)
{
    Outcome o;
    SurfaceParams p(f.integer("g"), f.integer("k"));
    MukaiVector v = f.vec("v");
    int r = f.small("r", -1, 40);
    TypeFlags tf{f.flag("refined"), f.flag("square-filter")};
    TypeEnumeration en = enumerate_types(p, v, r, tf);
    Integer s0 = v.s - v.r;
    std::optional<DegreeCase> dc;
    if (v.r <= 0 && s0 < 0) dc = DegreeCase::Generic;
    if (v.r <= 0 && s0 == 0) dc = DegreeCase::GenusMinusOne;
    if (!dc) o.warnings.push_back("balanced criterion needs r0 <= 0 and s0 <= 0; verdicts use the square test only");

    Json items = Json::array();
    for (const auto& t : en.items) {
        Json item{{"type", to_json(t)}, {"dim", int_json(stratum_dimension(p, v, t))}, {"ell", type_ell(t, r)}};
        Integer sq = type_square(p, v, t);
        Verdict vd = sq < -2 ? Verdict::EmptyByNecessity : Verdict::Unknown;
        auto bt = t.empty() ? std::nullopt : as_balanced(t);
        if (bt && dc) vd = balanced_nonempty(p, v, *bt, *dc).verdict;
        item["square"] = int_json(sq);
        item["verdict"] = verdict_name(vd);
        item["balanced"] = bt.has_value();
        items.push_back(item);
    }
    o.result = {{"r", r}, {"refined", tf.refined}, {"square_filtered", tf.square_filtered}, {"items", items}};
    o.summary = std::to_string(en.items.size()) + " stability types";
    return o;
}

Rational eps_or_default(Flags& f, const SurfaceParams& p, const MukaiVector& v, Outcome& o)
{
    if (f.has("eps")) {
        o.result["eps_source"] = "given";
        return f.rational("eps");
    }
    o.result["eps_source"] = "default";
    o.warnings.push_back("eps not given; using the heuristic default min(eps_M, k/(g+1))/2");
    return default_epsilon(p, v);
}

Outcome cmd_walls(Flags& f)
{
    Outcome o;
    SurfaceParams p(f.integer("g"), f.integer("k"));
    MukaiVector v = f.vec("v");
    StabilityType t = f.type("type");
    StabilityParams sp(p, eps_or_default(f, p, v, o));
    Json walls = Json::array();
    for (const auto& w : wall_sequence(sp, v, t)) walls.push_back(to_json(w));
    o.result["eps"] = rational_json(sp.eps);
    o.result["walls"] = walls;
    o.summary = std::to_string(walls.size()) + " walls on b = 0";
    return o;
}

Outcome cmd_tableaux(Flags& f)
{
    Outcome o;
    TableauParams tp{f.small("g", 1, 64), f.small("k", 1, 1000), f.small("r", 0, 64), f.small("d", -64, 64)};
    std::uint64_t budget = 50'000'000;
    if (f.has("budget")) budget = f.integer("budget").convert_to<std::uint64_t>();
    if (f.flag("check")) {
        OracleReport rep = oracle_check(tp, budget);
        o.result["rho_k"] = int_json(rep.rho_k);
        o.result["argmax_ell"] = rep.argmax;
        o.result["equality"] = rep.equality;
        if (rep.search.feasible) {
            o.result["omitted"] = rep.search.omitted;
            o.result["witness"] = to_json(rep.search.witness);
        }
        o.result["feasible"] = rep.search.feasible;
    } else {
        OmittedResult res = max_omitted(tp, budget);
        o.result["feasible"] = res.feasible;
        if (res.feasible) {
            o.result["omitted"] = res.omitted;
            o.result["witness"] = to_json(res.witness);
        }
    }
    o.summary = o.result["feasible"].get<bool>() ? "omitted " + o.result["omitted"].dump() + " labels" : "no valid tableau";
    return o;
}

Outcome cmd_chain(Flags& f)
{
    Outcome o;
    ChainSeries c = build_chain(f.small("g", 1, 10000), f.small("k", 1, 10000), f.small("r", 0, 10000), f.small("d", 0, 10000));
    ChainCheck chk = verify_chain(c);
    o.result["chain"] = to_json(c);
    o.result["verification"] = {{"ok", chk.ok()}, {"failures", chk.failures}, {"total_adj_rho", int_json(chk.total_adj_rho)}};
    o.warnings = c.notes;
    o.exit_code = chk.ok() ? 0 : 2;
    o.summary = chk.ok() ? "chain verified, total adjusted rho " + chk.total_adj_rho.str()
                         : std::to_string(chk.failures.size()) + " chain checks failed";
    return o;
}

Outcome cmd_verify(Flags& f, int threads)
{
    Outcome o;
    VerifyOptions opt;
    opt.max_g = f.small_or("max-g", 8, 3, 60);
    opt.max_k = f.small_or("max-k", 5, 2, 30);
    opt.threads = threads;
    std::string suite = f.has("suite") ? f.text("suite") : "all";
    auto results = run_verify(suite, opt);
    Json props = Json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        props.push_back({{"module", r.module},
                         {"name", r.name},
                         {"checked", r.checked},
                         {"failed", r.failed},
                         {"failures", r.failures},
                         {"ok", r.ok()}});
        if (!r.ok()) ++failed;
    }
    o.result = {{"suite", suite}, {"properties", props}, {"ok", failed == 0}};
    o.exit_code = failed == 0 ? 0 : 2;
    o.summary = std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " properties hold";
    return o;
}

Outcome cmd_plot(Flags& f)
{
    Outcome o;
    SurfaceParams p(f.integer("g"), f.integer("k"));
    MukaiVector v = f.vec("v");
    StabilityParams sp(p, eps_or_default(f, p, v, o));
    std::vector<Integer> es;
    if (f.has("type"))
        for (const auto& pair : f.type("type")) es.push_back(pair.e);
    Viewport vp = parse_viewport(f.has("viewport") ? f.text("viewport") : "-1,1,-0.2,1");
    Plot plot = plot_walls(sp, v, es, vp);
    Json walls = Json::array();
    std::size_t drawn = 0;
    for (const auto& w : plot.walls) {
        walls.push_back({{"e", int_json(w.e)},
                         {"line", {{"A", rational_json(w.line.A)}, {"B", rational_json(w.line.B)}, {"C", rational_json(w.line.C)}}},
                         {"visible", w.visible}});
        drawn += w.visible;
    }
    o.result["eps"] = rational_json(sp.eps);
    o.result["walls"] = walls;
    o.result["projection"] =
        plot.point ? Json{rational_json(plot.point->b), rational_json(plot.point->w)} : Json(nullptr);
    if (f.has("out")) {
        o.result["svg_path"] = f.text("out");
        o.artifact = plot.svg;
    } else {
        o.result["svg"] = plot.svg;
    }
    o.warnings = std::move(plot.warnings);
    o.summary = std::to_string(drawn) + " wall lines drawn";
    return o;
}

}  // namespace

Report execute(const CommandRequest& req)
{
    Report rep;
    Flags flags(req.flags);
    rep.doc = {{"schema_version", kSchemaVersion}, {"command", req.subcommand}};
    try {
        int threads = req.threads ? *req.threads : worker_count_from_env();
        Outcome o;
        const std::string& c = req.subcommand;
        if (c == "rho") o = cmd_rho(flags);
        else if (c == "rho-k") o = cmd_rho_k(flags);
        else if (c == "decompose") o = cmd_decompose(flags);
        else if (c == "types") o = cmd_types(flags);
        else if (c == "walls") o = cmd_walls(flags);
        else if (c == "tableaux") o = cmd_tableaux(flags);
        else if (c == "chain") o = cmd_chain(flags);
        else if (c == "verify") o = cmd_verify(flags, threads);
        else if (c == "plot-walls") o = cmd_plot(flags);
        else throw Error("unknown_subcommand", "unknown subcommand '" + c + "'");
        rep.doc["inputs"] = flags.inputs;
        rep.doc["result"] = o.result;
        rep.doc["warnings"] = o.warnings;
        rep.exit_code = o.exit_code;
        rep.artifact = std::move(o.artifact);
        rep.summary = o.summary;
    } catch (const Error& e) {
        rep.doc["inputs"] = flags.inputs;
        rep.doc["error"] = {{"code", e.code()}, {"message", e.what()}};
        rep.exit_code = 1;
        rep.summary = "error [" + e.code() + "]: " + e.what();
    }
    return rep;
}

}  // namespace k3walls
