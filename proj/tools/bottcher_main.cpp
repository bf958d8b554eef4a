#include "skewdyn/basin.hpp"
#include "skewdyn/bottcher.hpp"
#include "skewdyn/error.hpp"
#include "skewdyn/lift.hpp"
#include "skewdyn/mapfile.hpp"
#include "skewdyn/newton.hpp"
#include "skewdyn/region.hpp"
#include "skewdyn/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using json = nlohmann::json;
using namespace skew;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kPass = 0, kFail = 1, kGuard = 2, kInput = 3 };

struct Options {
    std::string file;
    std::string out;
    std::string csv;
    bool no_timestamp = false;
    std::optional<std::uint64_t> seed;
    int threads = 0;
    int pick = 0;
    std::vector<double> r_list;
    std::optional<int> samples;
    double eps = 0.5;
    // lift
    std::string stage;
    std::string weight;
    std::string weight2;
    // bottcher
    int points = 512;
    std::optional<double> tol;
    std::optional<int> n_max;
    std::vector<std::string> at;
    std::optional<double> r;
    // basin
    int n = 1;
    std::string grid = "200x200";
    std::string v;
};

struct Outcome {
    json results = json::array();
    bool pass = true;
};

int exit_code(errc code)
{
    switch (code) {
    case errc::guard_violation:
    case errc::weight_outside_interval:
    case errc::divisibility_failure:
    case errc::non_integral_exponent:
    case errc::invalid_input:
        return kGuard;
    default:
        return kFail;
    }
}

json error_json(const Error& e) { return {{"code", errc_name(e.code())}, {"message", e.what()}}; }

std::string timestamp()
{
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t resolve_seed(const Options& o, const MapDefaults& d)
{
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("BOTTCHER_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(errc::invalid_input, std::string("BOTTCHER_SEED is not an integer: ") + env);
        }
    }
    return d.seed;
}

// classifications to run: the map's own, or its boundary alternatives
std::vector<Classification> selected(const Classification& c, int pick)
{
    if (c.kind != Case::boundary) {
        if (pick) throw Error(errc::guard_violation, "--pick-alternative applies only to Boundary classifications");
        return {c};
    }
    if (pick) {
        if (pick < 1 || pick > static_cast<int>(c.alternatives.size()))
            throw Error(errc::invalid_input, "--pick-alternative must be 1 or 2");
        return {c.alternatives[pick - 1]};
    }
    for (auto& a : c.alternatives)
        if (a.d <= 1)
            throw Error(errc::guard_violation, "Boundary classification with d = " + std::to_string(a.d) +
                                                   " at an alternative; the d = 1 theory needs delta != T_k");
    return c.alternatives;
}

json dominance_json(const DominanceReport& d)
{
    return {{"r", d.r},
            {"sup_eta", d.sup_eta},
            {"sup_zeta", d.sup_zeta},
            {"sup_relative_f_error", d.sup_relative_f_error},
            {"samples", d.samples},
            {"invariance_violations", d.violations.size()}};
}

json point_json(const Point& p) { return {{"z", to_json(p.first)}, {"w", to_json(p.second)}}; }

cplx parse_cplx(const std::string& re, const std::string& im)
{
    try {
        return {std::stod(re), std::stod(im)};
    } catch (const std::exception&) {
        throw Error(errc::invalid_input, "bad complex number '" + re + "," + im + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

ExtRational parse_ext(const std::string& s)
{
    if (s == "inf" || s == "+inf") return ExtRational::pos_inf();
    if (s == "-inf") return ExtRational::neg_inf();
    try {
        return ExtRational(parse_rational(s));
    } catch (const std::exception&) {
        throw Error(errc::invalid_input, "bad rational '" + s + "'");
    }
}

Outcome run_classify(const MapSpec& spec, json& report)
{
    const NewtonPolygon np = newton_polygon(spec.f.q);
    const Classification c = classify(np, spec.f.p.delta());
    report["newton_polygon"] = to_json(np);
    Outcome out;
    std::vector<Classification> pieces = c.kind == Case::boundary ? c.alternatives : std::vector<Classification>{c};
    for (auto& piece : pieces) {
        json entry = {{"case", case_name(piece.kind)}, {"k", piece.k_index}};
        if (piece.degenerate()) {
            entry["intervals"] = {{"error", "d = 0"}};
        } else {
            try {
                entry["intervals"] = to_json(weight_intervals(piece, np, spec.f.p.delta()));
            } catch (const Error& e) {
                entry["intervals"] = {{"error", error_json(e)}};
            }
        }
        out.results.push_back(entry);
    }
    return out;
}

Outcome run_verify(const MapSpec& spec, const Classification& c, const Options& o, std::uint64_t seed, json& report)
{
    const std::vector<double> grid = o.r_list.empty() ? spec.defaults.r_grid : o.r_list;
    const int count = o.samples.value_or(spec.defaults.samples);
    const NewtonPolygon np = newton_polygon(spec.f.q);
    Outcome out;
    for (auto& alt : selected(c, o.pick)) {
        json entry = {{"classification", to_json(alt)}};
        auto reps = verify_main_lemma(spec.f, alt, grid, count, seed, o.threads);
        int accepted = -1;
        json per_r = json::array();
        for (std::size_t i = 0; i < reps.size(); ++i) {
            json row = dominance_json(reps[i]);
            row["passes"] = reps[i].passes(o.eps);
            if (accepted < 0 && reps[i].passes(o.eps)) accepted = static_cast<int>(i);
            per_r.push_back(row);
        }
        bool invariant = accepted >= 0;
        for (std::size_t i = accepted < 0 ? reps.size() : accepted; i < reps.size(); ++i)
            invariant = invariant && reps[i].violations.empty();
        entry["per_r"] = per_r;
        entry["eps_target"] = o.eps;
        entry["accepted_r"] = accepted < 0 ? json(nullptr) : json(reps[accepted].r);
        entry["dominance"] = accepted >= 0;
        entry["invariance"] = invariant;
        bool ok = accepted >= 0 && invariant;
        if (alt.d == 1) {
            entry["exponent_M"] = to_json(exponent_M(alt, np, spec.f.p.delta()));
            // first radius at or below the accepted one where orbits shrink with U_{r/2^j}, j <= 6
            bool contracted = false;
            json tried = json::array();
            for (std::size_t i = accepted < 0 ? reps.size() : accepted; i < reps.size() && !contracted; ++i) {
                auto cr = d1_contraction_check(spec.f, alt, reps[i].r, 6, count, seed);
                tried.push_back({{"r", reps[i].r}, {"n", cr.n}, {"samples", cr.samples}, {"inside", cr.inside},
                                 {"violations", cr.violations.size()}});
                contracted = cr.holds();
            }
            entry["contraction"] = tried;
            ok = ok && contracted;
        }
        entry["pass"] = ok;
        out.pass = out.pass && ok;
        out.results.push_back(entry);
    }
    report["samples"] = count;
    return out;
}

json lift_json(const SkewProduct& f, const LiftedMap& lm, int d, std::uint64_t seed)
{
    json stages = json::array();
    for (auto& s : lm.stages)
        stages.push_back({{"kind", s.kind == CoveringSpec::Kind::pi1 ? "pi1" : "pi2"}, {"weight", to_json(s.weight())}});
    bool single = lm.q_tilde && newton_polygon(*lm.q_tilde).s() == 1;
    OriginReport org = lifted_origin_type(lm, d);
    SemiconjugacyReport sc = check_semiconjugacy(f, lm, 200, seed);
    json out = {{"stages", stages},
                {"M", lm.M},
                {"E", lm.E},
                {"degree", lm.degree},
                {"single_vertex", single},
                {"origin",
                 {{"integral_nonnegative", org.integral_nonnegative},
                  {"fixed", org.fixed},
                  {"nilpotent", org.nilpotent},
                  {"superattracting", org.superattracting()}}},
                {"semiconjugacy",
                 {{"max_defect", sc.max_defect}, {"max_relative", sc.max_relative}, {"points", sc.points},
                  {"radius", sc.radius}}}};
    if (lm.q_tilde) {
        json support = json::array();
        for (auto& e : lm.q_tilde->support()) support.push_back({e.first, e.second});
        out["q_tilde_support"] = support;
    }
    out["pass"] = single && org.superattracting() && sc.points > 0 && sc.max_relative < 1e-9;
    return out;
}

Outcome run_lift(const MapSpec& spec, const Classification& c, const Options& o, std::uint64_t seed)
{
    using Kind = CoveringSpec::Kind;
    const NewtonPolygon np = newton_polygon(spec.f.q);
    const int delta = spec.f.p.delta();
    Outcome out;
    for (auto& alt : selected(c, o.pick)) {
        std::string stage = o.stage;
        if (stage.empty()) stage = alt.kind == Case::case3 ? "pi2" : alt.kind == Case::case4 ? "both" : "pi1";
        const ExtRational a0 = alpha0(delta, alt.gamma, alt.d);
        std::vector<std::pair<Rational, std::optional<Rational>>> candidates;
        if (!o.weight.empty()) {
            std::optional<Rational> w2;
            if (!o.weight2.empty()) w2 = parse_rational(o.weight2);
            candidates.emplace_back(parse_rational(o.weight), w2);
        } else if (stage == "pi1") {
            candidates.emplace_back(alt.kind == Case::case1 ? Rational(0) : alt.l1.value(), std::nullopt);
        } else if (stage == "pi2") {
            if (alt.gamma > 0 && a0.finite()) candidates.emplace_back(a0.value(), std::nullopt);
            if (alt.l2.finite()) candidates.emplace_back(alt.l2.value(), std::nullopt);
        } else {
            WeightIntervals wi = weight_intervals(alt, np, delta);
            for (const ExtRational& w1 : {a0, alt.l1, wi.i1.hi})
                if (w1.finite() && w1.value() > 0 && wi.i1.contains(w1.value()))
                    candidates.emplace_back(w1.value(), std::nullopt);
        }
        if (candidates.empty()) throw Error(errc::guard_violation, "no admissible default weight; pass --weight");

        json entry = {{"classification", to_json(alt)}, {"stage", stage}};
        json attempts = json::array();
        std::optional<json> lifted;
        for (auto& [w1, w2opt] : candidates) {
            try {
                if (stage == "pi1") {
                    lifted = lift_json(spec.f, lift_pi1(spec.f, alt, CoveringSpec::make(Kind::pi1, w1)), alt.d, seed);
                } else if (stage == "pi2") {
                    lifted = lift_json(spec.f, lift_pi2(spec.f, alt, CoveringSpec::make(Kind::pi2, w1)), alt.d, seed);
                } else if (stage == "both") {
                    LiftedMap first = lift_pi1(spec.f, alt, CoveringSpec::make(Kind::pi1, w1));
                    std::vector<Rational> seconds;
                    if (w2opt) {
                        seconds.push_back(*w2opt);
                    } else {
                        Interval i2 = weight_interval_2(alt, w1);
                        for (const ExtRational& e : {i2.lo, i2.hi})
                            if (e.finite() && e.value() > 0) seconds.push_back(e.value() * first.stages[0].r);
                    }
                    for (auto& w : seconds) {
                        try {
                            lifted = lift_json(spec.f, lift_pi2(spec.f, alt, first, CoveringSpec::make(Kind::pi2, w)),
                                               alt.d, seed);
                            break;
                        } catch (const Error& e) {
                            attempts.push_back({{"weights", {to_string(w1), to_string(w)}}, {"error", error_json(e)}});
                            if (w2opt) throw;
                        }
                    }
                } else {
                    throw Error(errc::invalid_input, "--stage must be pi1, pi2 or both");
                }
                if (lifted) break;
            } catch (const Error& e) {
                if (!o.weight.empty()) throw;
                attempts.push_back({{"weights", {to_string(w1)}}, {"error", error_json(e)}});
            }
        }
        if (!attempts.empty()) entry["rejected_defaults"] = attempts;
        if (!lifted) throw Error(errc::guard_violation, "no default weight produced a lift; pass --weight");
        entry["lift"] = *lifted;
        out.pass = out.pass && (*lifted)["pass"].get<bool>();
        out.results.push_back(entry);
    }
    return out;
}

Outcome run_bottcher(const MapSpec& spec, const Classification& c, const Options& o, std::uint64_t seed)
{
    const double tol = o.tol.value_or(spec.defaults.tol);
    const int n_max = o.n_max.value_or(spec.defaults.n_max);
    const int count = o.samples.value_or(spec.defaults.samples);
    Outcome out;
    for (auto& alt : selected(c, o.pick)) {
        json entry = {{"classification", to_json(alt)}};
        double r = 0.0, eps_measured = 0.0;
        if (o.r) {
            r = *o.r;
            auto rep = dominance_report(spec.f, alt, r, count, seed, o.threads);
            eps_measured = std::max(rep.sup_eta, rep.sup_zeta);
        } else {
            RadiusSearch rs = search_radius(spec.f, alt, spec.defaults.r_grid, o.eps, count, seed, o.threads);
            if (rs.accepted < 0) throw Error(errc::no_convergence, "no radius in r_grid passes the dominance check");
            r = rs.r();
            eps_measured = std::max(rs.reports[rs.accepted].sup_eta, rs.reports[rs.accepted].sup_zeta);
        }
        entry["r"] = r;
        entry["eps_measured"] = eps_measured;

        std::vector<Point> pts;
        for (auto& s : o.at) {
            auto parts = split(s, ',');
            if (parts.size() != 4) throw Error(errc::invalid_input, "--at expects zre,zim,wre,wim");
            pts.emplace_back(parse_cplx(parts[0], parts[1]), parse_cplx(parts[2], parts[3]));
        }
        const std::size_t explicit_points = pts.size();
        if (o.points > 0)
            for (auto& p : sample(WedgeRegion::of(alt, r), o.points, seed)) pts.push_back(p);

        json rows = json::array();
        int converged = 0, failed = 0;
        double max_res = 0.0, max_dev = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto [z, w] = pts[i];
            json row = point_json(pts[i]);
            try {
                BottcherResult b = bottcher_evaluate(spec.f, alt, z, w, tol, n_max);
                ++converged;
                max_res = std::max(max_res, b.residual);
                double dev = std::max(std::abs(b.Phi.Z - std::log(z)), std::abs(b.Phi.W - std::log(w)));
                max_dev = std::max(max_dev, dev);
                row["phi"] = {to_json(b.phi_z), to_json(b.phi_w)};
                row["iterations"] = b.iterations;
                row["residual"] = b.residual;
                if (i < explicit_points) row["increments"] = b.increments;
            } catch (const Error& e) {
                ++failed;
                row["error"] = error_json(e);
            }
            if (i < explicit_points || i < 16 || row.contains("error")) rows.push_back(row);
        }
        entry["points"] = rows;
        entry["points_total"] = pts.size();
        entry["converged"] = converged;
        entry["failed"] = failed;
        entry["max_residual"] = max_res;
        entry["max_log_deviation"] = max_dev;
        if (alt.d >= 2) {
            double bound = apriori_constant(alt) * std::log1p(eps_measured);
            entry["apriori_log_bound"] = bound;
            entry["apriori_holds"] = max_dev < bound;
            json decks = json::array();
            for (auto& s : deck_symmetries(MonomialMap::of(spec.f, alt)))
                decks.push_back({{"c1", to_json(s.c1)}, {"c2", to_json(s.c2)},
                                 {"turn1", to_json(s.turn1)}, {"turn2", to_json(s.turn2)}});
            entry["deck_symmetries"] = decks;
        }
        bool ok = failed == 0 && max_res < 1e-8;
        entry["pass"] = ok;
        out.pass = out.pass && ok;
        out.results.push_back(entry);
    }
    return out;
}

Outcome run_basin(const MapSpec& spec, const Classification& c, const Options& o, std::uint64_t seed)
{
    const NewtonPolygon np = newton_polygon(spec.f.q);
    const double r = o.r.value_or(spec.defaults.r_grid.front());
    std::optional<VRegion> v;
    if (!o.v.empty()) {
        auto parts = split(o.v, ',');
        if (parts.size() != 4) throw Error(errc::invalid_input, "--v expects a1,a2,r1,r2");
        v = VRegion{std::stod(parts[2]), std::stod(parts[3]), parse_ext(parts[0]), parse_ext(parts[1])};
    }
    RasterSpec raster;
    {
        auto wh = split(o.grid, 'x');
        if (wh.size() != 2) throw Error(errc::invalid_input, "--grid expects WxH");
        raster.width = std::stoi(wh[0]);
        raster.height = std::stoi(wh[1]);
    }
    Outcome out;
    std::string csv;
    for (auto& alt : selected(c, o.pick)) {
        json entry = {{"classification", to_json(alt)}, {"r", r}, {"n", o.n}};
        auto R = [&](const ExtRational& a) { return to_json(R_pow(a, o.n, alt.delta, alt.gamma, alt.d)); };
        entry["R_n"] = {{"of_0", R(ExtRational(0))}, {"of_l1", R(alt.l1)}, {"of_l1_plus_l2", R(alt.l1 + alt.l2)}};
        const ExponentRegion pre = preimage_region(alt, r, o.n);
        entry["preimage_region"] = pre.str();
        BasinDescriptor bd = basin_descriptor(alt, np, r);
        entry["basin"] = {{"subcase", bd.subcase}, {"region", bd.region.str()}, {"alpha0", to_json(bd.alpha0)}};

        // closed form against the forward orbit, on points kept 1e-6 away from every bound
        std::mt19937_64 gen(seed);
        std::uniform_real_distribution<double> ux(-6.907755278982137, -1e-3), uy(-14.0, 2.0);
        int checked = 0, mismatches = 0;
        while (checked < 1000) {
            double x = ux(gen), y = uy(gen);
            bool near = (pre.z_bound && std::abs(x - *pre.z_bound) < 1e-6) ||
                        (pre.upper && std::abs(y - pre.upper->at(x)) < 1e-6) ||
                        (pre.lower && std::abs(y - pre.lower->at(x)) < 1e-6);
            if (near) continue;
            ++checked;
            cplx z = std::exp(x), w = std::exp(y);
            if (pre.contains(z, w) != membership_oracle(alt, r, o.n, z, w)) ++mismatches;
        }
        entry["oracle"] = {{"points", checked}, {"mismatches", mismatches}};
        bool ok = mismatches == 0;
        if (v) {
            VCheck chk = check_v_region(alt, np, r, *v, 2000, seed);
            json vj = {{"u_in_v", chk.u_in_v}, {"v_in_basin", chk.v_in_basin}, {"samples", chk.samples}};
            if (chk.witness) vj["witness"] = point_json(*chk.witness);
            entry["v"] = vj;
            ok = ok && !chk.witness;
        }
        if (!o.csv.empty() && csv.empty()) csv = raster_csv(alt, np, r, o.n, v, raster);
        entry["pass"] = ok;
        out.pass = out.pass && ok;
        out.results.push_back(entry);
    }
    if (!o.csv.empty()) {
        std::ofstream f(o.csv);
        if (!f) throw Error(errc::invalid_input, "cannot write " + o.csv);
        f << csv;
    }
    return out;
}

void emit(const json& report, const Options& o)
{
    std::string text = report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) {
        std::cerr << "cannot write " << o.out << "\n";
        return;
    }
    f << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Newton-polygon classification, Bottcher coordinates and basins for polynomial skew products"};
    app.require_subcommand(1);
    Options o;
    o.threads = std::max(1u, std::thread::hardware_concurrency());

    auto common = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "map file (.json or .toml)")->required();
        sub->add_option("--out", o.out, "write the JSON report here instead of stdout");
        sub->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp field");
        sub->add_option("--seed", o.seed, "sampling seed (overrides BOTTCHER_SEED and the file default)");
        sub->add_option("--threads", o.threads, "worker threads for sampling")->check(CLI::PositiveNumber);
    };
    auto verifying = [&](CLI::App* sub) {
        sub->add_option("--pick-alternative", o.pick, "run only alternative 1 or 2 of a Boundary classification");
        sub->add_option("--samples", o.samples, "sample count per radius")->check(CLI::PositiveNumber);
        sub->add_option("--eps", o.eps, "dominance target for sup|eta|");
    };

    auto* classify_cmd = app.add_subcommand("classify", "Newton polygon, case, weights and intervals");
    common(classify_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "dominance and forward invariance on U_r over a radius grid");
    common(verify_cmd);
    verifying(verify_cmd);
    verify_cmd->add_option("--r", o.r_list, "radii to check (default: file r_grid)");

    auto* lift_cmd = app.add_subcommand("lift", "blow-up lifts to a single-vertex germ");
    common(lift_cmd);
    lift_cmd->add_option("--pick-alternative", o.pick, "lift alternative 1 or 2 of a Boundary classification");
    lift_cmd->add_option("--stage", o.stage, "pi1, pi2 or both")->check(CLI::IsMember({"pi1", "pi2", "both"}));
    lift_cmd->add_option("--weight", o.weight, "covering weight s/r (first stage)");
    lift_cmd->add_option("--weight2", o.weight2, "second-stage weight s2/r2 (Case 4)");

    auto* bottcher_cmd = app.add_subcommand("bottcher", "evaluate the Bottcher coordinate on sampled points");
    common(bottcher_cmd);
    verifying(bottcher_cmd);
    bottcher_cmd->add_option("--points", o.points, "sampled points in U_r")->check(CLI::NonNegativeNumber);
    bottcher_cmd->add_option("--tol", o.tol, "increment tolerance");
    bottcher_cmd->add_option("--nmax", o.n_max, "iteration cap");
    bottcher_cmd->add_option("--at", o.at, "extra point zre,zim,wre,wim (repeatable)");
    bottcher_cmd->add_option("--r", o.r, "radius of U_r (default: first r passing --eps)");

    auto* basin_cmd = app.add_subcommand("basin", "preimages of U, the basin catalog entry and V");
    common(basin_cmd);
    basin_cmd->add_option("--pick-alternative", o.pick, "use alternative 1 or 2 of a Boundary classification");
    basin_cmd->add_option("--n", o.n, "preimage depth")->check(CLI::NonNegativeNumber);
    basin_cmd->add_option("--grid", o.grid, "raster size WxH");
    basin_cmd->add_option("--v", o.v, "V parameters a1,a2,r1,r2");
    basin_cmd->add_option("--r", o.r, "radius of U_r (default: first r_grid entry)");
    basin_cmd->add_option("--csv", o.csv, "write the raster here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kInput;
    }
    CLI::App* sub = app.get_subcommands().front();

    MapSpec spec{SkewProduct{UniPoly({{2, 1.0}}), BiPoly()}, {}, {}};
    std::uint64_t seed = 0;
    try {
        spec = load_map(o.file);
        seed = resolve_seed(o, spec.defaults);
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }

    json report = {{"command", sub->get_name()}, {"version", kVersion}, {"seed", seed}, {"input", spec.echo}};
    if (!o.no_timestamp) report["timestamp"] = timestamp();
    int code = kPass;
    try {
        const Classification c = classify(spec.f);
        report["classification"] = to_json(c);
        Outcome res;
        const std::string name = sub->get_name();
        if (name == "classify")
            res = run_classify(spec, report);
        else if (name == "verify")
            res = run_verify(spec, c, o, seed, report);
        else if (name == "lift")
            res = run_lift(spec, c, o, seed);
        else if (name == "bottcher")
            res = run_bottcher(spec, c, o, seed);
        else
            res = run_basin(spec, c, o, seed);
        report["results"] = res.results;
        report["verdict"] = {{"pass", res.pass}};
        code = res.pass ? kPass : kFail;
    } catch (const Error& e) {
        report["error"] = error_json(e);
        report["verdict"] = {{"pass", false}};
        code = exit_code(e.code());
        std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    }
    emit(report, o);
    return code;
}
