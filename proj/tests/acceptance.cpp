#include "cli_support.hpp"
#include "support.hpp"

#include "skewdyn/basin.hpp"
#include "skewdyn/bottcher.hpp"
#include "skewdyn/error.hpp"
#include "skewdyn/lift.hpp"
#include "skewdyn/newton.hpp"
#include "skewdyn/region.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace tst;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> problems;

    void fail(const std::string& why)
    {
        pass = false;
        if (problems.size() < 6) problems.push_back(why);
    }
};

cplx ipow(cplx x, long n)
{
    cplx out{1.0, 0.0};
    for (long k = 0; k < n; ++k) out *= x;
    return out;
}

double wrap(double t)
{
    return std::remainder(t, 2.0 * M_PI);
}

double log_dev(cplx a, cplx b) { return std::abs(cplx(a.real() - b.real(), wrap(a.imag() - b.imag()))); }

// 1
void newton_oracle(Outcome& o)
{
    Gen g(kSeed);
    int mismatches = 0, intercepts = 0;
    for (int t = 0; t < 500; ++t) {
        auto support = g.support(12, 20);
        NewtonPolygon np = newton_polygon(support);
        auto verts = hull_oracle(support);
        if (np.vertices != verts) {
            ++mismatches;
            o.fail("vertex mismatch on random support #" + std::to_string(t));
            continue;
        }
        for (int k = 1; k < np.s(); ++k) {
            ++intercepts;
            if (np.T(k) != intercept_oracle(support, verts[k - 1], verts[k])) {
                ++mismatches;
                o.fail("intercept mismatch on random support #" + std::to_string(t));
            }
        }
    }
    o.detail << "500 supports, " << intercepts << " intercepts, " << mismatches << " mismatches";
}

// 2
void classification(Outcome& o)
{
    int boundaries = 0;
    for (auto& in : corpus()) {
        SkewProduct f = in.f();
        NewtonPolygon np = newton_polygon(f.q);
        Classification c;
        try {
            c = classify(f);
        } catch (const Error& e) {
            o.fail(in.name + ": classify threw " + e.what());
            continue;
        }
        if (c.kind != in.kind) {
            o.fail(in.name + ": got " + case_name(c.kind));
            continue;
        }
        if (c.k_index != in.k) o.fail(in.name + ": wrong vertex index");
        if (in.boundary()) {
            ++boundaries;
            if (np.T(c.k_index) != Rational(f.p.delta())) o.fail(in.name + ": T_k differs from delta");
            if (c.alternatives.size() != 2 || c.alternatives[0].kind != in.alternatives[0] ||
                c.alternatives[1].kind != in.alternatives[1])
                o.fail(in.name + ": wrong boundary alternatives");
            continue;
        }
        if (c.gamma != in.gamma || c.d != in.d) o.fail(in.name + ": wrong dominant term");
        if (c.l1 != weight_of(in.l1) || c.l2 != weight_of(in.l2)) o.fail(in.name + ": wrong weights");
    }
    o.detail << corpus().size() << " instances, " << boundaries << " boundaries";
}

// 3
void dominance(Outcome& o)
{
    const std::vector<double> grid{0.4, 0.2, 0.1, 0.05};
    int n = 0;
    for (auto& in : select(verifiable_d2)) {
        SkewProduct f = in.f();
        Classification c = classify(f);
        auto reps = verify_main_lemma(f, c, grid, 4096, kSeed);
        for (std::size_t i = 1; i < reps.size(); ++i) {
            bool zero = reps[i - 1].sup_eta == 0.0 && reps[i].sup_eta == 0.0;
            if (!zero && !(reps[i].sup_eta < reps[i - 1].sup_eta))
                o.fail(in.name + ": sup|eta| does not decrease at r = " + std::to_string(grid[i]));
        }
        RadiusSearch rs = search_radius(f, c, grid, 0.1, 4096, kSeed);
        if (rs.accepted < 0) {
            o.fail(in.name + ": no radius accepted");
            continue;
        }
        const DominanceReport& acc = rs.reports[rs.accepted];
        if (!(acc.sup_eta < 0.1)) o.fail(in.name + ": sup|eta| >= 0.1 at the accepted r");
        if (!acc.violations.empty() || acc.samples != 4096)
            o.fail(in.name + ": " + std::to_string(acc.violations.size()) + " invariance violations");

        // eta against direct evaluation of q / (b z^gamma w^d) - 1
        for (auto [z, w] : sample(WedgeRegion::of(c, acc.r), 50, kSeed + 7)) {
            cplx direct = f.q(z, w) / (c.b * ipow(z, c.gamma) * ipow(w, c.d)) - 1.0;
            if (std::abs(eta(f, c, z, w) - direct) > 1e-9 * (1.0 + std::abs(direct)))
                o.fail(in.name + ": eta disagrees with direct evaluation");
        }
        ++n;
    }
    o.detail << n << " instances";
}

// 4
void bottcher_bounds(Outcome& o)
{
    int n = 0, points = 0;
    double worst_residual = 0.0, worst_ratio = 0.0;
    for (auto& in : select(verifiable_d2)) {
        SkewProduct f = in.f();
        Classification c = classify(f);
        RadiusSearch rs = search_radius(f, c, halving_grid(0.4, 12), 0.02, 4096, kSeed);
        if (rs.accepted < 0) {
            o.fail(in.name + ": no radius with sup eps < 0.02");
            continue;
        }
        const DominanceReport& acc = rs.reports[rs.accepted];
        const double eps = std::max(acc.sup_eta, acc.sup_zeta);
        const double et = std::log1p(eps);
        const double delta = c.delta, d = c.d;
        const double apriori = apriori_constant(c) * et;
        for (auto [z, w] : sample(WedgeRegion::of(c, acc.r), 512, kSeed + 1)) {
            BottcherResult res;
            try {
                res = bottcher_evaluate(f, c, z, w);
            } catch (const Error& e) {
                o.fail(in.name + ": " + e.what());
                continue;
            }
            ++points;
            worst_residual = std::max(worst_residual, res.residual);
            if (!(res.residual < 1e-8)) o.fail(in.name + ": residual " + std::to_string(res.residual));
            for (std::size_t j = 1; j <= res.inc_z.size(); ++j) {
                double bz = et / std::pow(delta, j);
                double bw = et / std::pow(d, j) + gamma_n(j, c.delta, c.gamma, c.d) * et / std::pow(delta * d, j);
                if (res.inc_z[j - 1] > 1.05 * bz + 1e-14 || res.inc_w[j - 1] > 1.05 * bw + 1e-14)
                    o.fail(in.name + ": increment " + std::to_string(j) + " exceeds its bound");
                if (bw > 0) worst_ratio = std::max(worst_ratio, res.inc_w[j - 1] / bw);
                if (bz > 0) worst_ratio = std::max(worst_ratio, res.inc_z[j - 1] / bz);
            }
            double dev = std::max(log_dev(res.Phi.Z, std::log(z)), log_dev(res.Phi.W, std::log(w)));
            if (dev > 1.05 * apriori + 1e-14) o.fail(in.name + ": ||Phi - id|| above the a-priori bound");
            double lhs = std::max(std::abs(res.phi_z - z), std::abs(res.phi_w - w));
            double id = std::max(std::abs(z), std::abs(w));
            if (!(lhs <= (dev * std::exp(dev) + 1e-14) * id))
                o.fail(in.name + ": ||phi - id|| above eps e^eps ||id||");
        }
        ++n;
    }
    o.detail << n << " instances, " << points << " points, max residual " << worst_residual
             << ", max increment/bound " << worst_ratio;
}

// 5
void d1_path(Outcome& o)
{
    for (const char* name : {"c2-d1", "c4-d1"}) {
        const Instance* in = nullptr;
        for (auto& x : corpus())
            if (x.name == name) in = &x;
        SkewProduct f = in->f();
        Classification c = classify(f);
        NewtonPolygon np = newton_polygon(f.q);
        RadiusSearch rs = search_radius(f, c, halving_grid(0.4, 8), 0.1, 4096, kSeed);
        if (rs.accepted < 0) {
            o.fail(std::string(name) + ": not verified at any r");
            continue;
        }
        double r_ok = 0.0;
        for (double r = rs.r(); r > 1e-3 && r_ok == 0.0; r /= 2) {
            ContractionReport cr = d1_contraction_check(f, c, r, 6, 1024, kSeed);
            if (cr.holds()) r_ok = r;
        }
        if (r_ok == 0.0) {
            o.fail(std::string(name) + ": f^n(U_r) in U_{r/2^n} fails on every r tried");
            continue;
        }

        const double M = to_double(exponent_M(c, np, c.delta));
        const double need = 0.9 * M * std::log(2.0);
        double worst = INFINITY;
        int used = 0;
        for (auto [z, w] : sample(WedgeRegion::of(c, r_ok), 64, kSeed + 3)) {
            BottcherResult res = bottcher_evaluate(f, c, z, w);
            // least squares slope of log increment over the steps above round-off
            std::vector<double> ys;
            for (double v : res.inc_w) {
                if (!(v > 1e-13)) break;
                ys.push_back(std::log(v));
            }
            if (ys.size() < 3) continue;
            double sx = 0, sy = 0, sxx = 0, sxy = 0, m = double(ys.size());
            for (std::size_t j = 0; j < ys.size(); ++j) {
                sx += j;
                sy += ys[j];
                sxx += double(j) * j;
                sxy += j * ys[j];
            }
            double rate = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
            worst = std::min(worst, rate);
            ++used;
        }
        if (used < 10) o.fail(std::string(name) + ": too few points with a measurable decay");
        if (!(worst >= need)) o.fail(std::string(name) + ": decay exponent " + std::to_string(worst) + " < " +
                                     std::to_string(need));
        o.detail << name << " r=" << r_ok << " M=" << M << " min decay " << worst << " (" << used << " pts); ";
    }

    std::string path = write_file("boundary_example.json", R"({"p": [[2, 1, 0]], "q": [[1, 1, 1, 0], [2, 0, 1, 0]]})");
    int code = run_cli("verify " + path + " --no-timestamp");
    if (code != 2) o.fail("boundary example exit code " + std::to_string(code));
    o.detail << "boundary example exit " << code;
}

// 6
struct LiftCounts {
    int admissible = 0, outside = 0, divisibility = 0;
};

bool check_lift(Outcome& o, const std::string& name, const SkewProduct& f, const Classification& c,
                const LiftedMap& lm)
{
    if (!lm.q_tilde || newton_polygon(*lm.q_tilde).s() != 1) {
        o.fail(name + ": lifted Newton polygon is not a single vertex");
        return false;
    }
    // q o pi * x^E10 y^E11 = q_tilde * pi^*(z^gamma w^d)
    long gz = c.gamma * lm.M[0][0] + c.d * lm.M[1][0];
    long gw = c.gamma * lm.M[0][1] + c.d * lm.M[1][1];
    Gen g(kSeed);
    int good = 0;
    for (int attempt = 0; attempt < 20000 && good < 200; ++attempt) {
        cplx x = g.polar(g.real(std::log(0.05), std::log(0.6)));
        cplx y = g.polar(g.real(std::log(0.05), std::log(0.6)));
        cplx pz = ipow(x, lm.M[0][0]) * ipow(y, lm.M[0][1]);
        cplx pw = ipow(x, lm.M[1][0]) * ipow(y, lm.M[1][1]);
        cplx lhs = f.q(pz, pw) * ipow(x, lm.E[1][0]) * ipow(y, lm.E[1][1]);
        cplx rhs = (*lm.q_tilde)(x, y) * ipow(x, gz) * ipow(y, gw);
        if (std::abs(lhs - rhs) > 1e-9 * std::abs(rhs)) {
            o.fail(name + ": lifted polynomial identity fails");
            return false;
        }
        std::pair<cplx, cplx> up;
        try {
            up = lm(x, y);
        } catch (const Error&) {
            continue;
        }
        cplx uz = ipow(up.first, lm.M[0][0]) * ipow(up.second, lm.M[0][1]);
        cplx uw = ipow(up.first, lm.M[1][0]) * ipow(up.second, lm.M[1][1]);
        auto [fz, fw] = f(pz, pw);
        if (std::abs(uz - fz) > 1e-9 * std::abs(fz) || std::abs(uw - fw) > 1e-9 * std::abs(fw)) {
            o.fail(name + ": pi o lift differs from f o pi");
            return false;
        }
        ++good;
    }
    if (good < 200) {
        o.fail(name + ": only " + std::to_string(good) + " semiconjugacy points");
        return false;
    }
    return true;
}

void expect_rejection(Outcome& o, LiftCounts& n, const std::string& what, errc want,
                      const std::function<void()>& run)
{
    try {
        run();
        o.fail(what + " was accepted");
    } catch (const Error& e) {
        if (e.code() != want) {
            o.fail(what + " rejected with " + errc_name(e.code()));
            return;
        }
        (want == errc::divisibility_failure ? n.divisibility : n.outside)++;
    }
}

std::vector<Rational> candidate_weights(int max_den, int max_num)
{
    std::set<Rational> s;
    for (int r = 1; r <= max_den; ++r)
        for (int k = 0; k <= max_num; ++k) s.insert(Rational(k, r));
    return {s.begin(), s.end()};
}

void lifts(Outcome& o)
{
    LiftCounts n;
    int instances = 0;
    const auto weights = candidate_weights(4, 24);
    for (auto& in : select(single_vertex_ok)) {
        if (in.kind == Case::case1) continue;
        ++instances;
        SkewProduct f = in.f();
        Classification c = classify(f);
        auto support = f.q.support();
        NewtonPolygon np = newton_polygon(f.q);
        for (const Rational& w : weights) {
            std::string tag = in.name + " weight " + to_string(w);
            if (in.kind == Case::case2) {
                auto spec = CoveringSpec::make(CoveringSpec::Kind::pi1, w);
                if (in_If_case2(c, support, w)) {
                    if (check_lift(o, tag, f, c, lift_pi1(f, c, spec))) ++n.admissible;
                } else {
                    expect_rejection(o, n, tag, errc::weight_outside_interval, [&] { lift_pi1(f, c, spec); });
                }
            } else if (in.kind == Case::case3) {
                if (w == 0) continue;
                auto spec = CoveringSpec::make(CoveringSpec::Kind::pi2, w);
                if (!in_If_case3(c, support, w))
                    expect_rejection(o, n, tag, errc::weight_outside_interval, [&] { lift_pi2(f, c, spec); });
                else if (c.gamma % spec.s != 0)
                    expect_rejection(o, n, tag, errc::divisibility_failure, [&] { lift_pi2(f, c, spec); });
                else if (check_lift(o, tag, f, c, lift_pi2(f, c, spec)))
                    ++n.admissible;
            } else if (in.kind == Case::case4) {
                auto spec = CoveringSpec::make(CoveringSpec::Kind::pi1, w);
                if (!in_If1_case4(c, np, w)) {
                    expect_rejection(o, n, tag, errc::weight_outside_interval, [&] { lift_pi1(f, c, spec); });
                    continue;
                }
                LiftedMap first = lift_pi1(f, c, spec);
                for (const Rational& w2 : candidate_weights(3, 30)) {
                    if (w2 == 0) continue;
                    auto spec2 = CoveringSpec::make(CoveringSpec::Kind::pi2, w2);
                    std::string tag2 = tag + " then " + to_string(w2);
                    if (!in_If2_case4(c, support, w, w2 / spec.r))
                        expect_rejection(o, n, tag2, errc::weight_outside_interval,
                                         [&] { lift_pi2(f, c, first, spec2); });
                    else if (first.E[1][0] % spec2.s != 0)
                        expect_rejection(o, n, tag2, errc::divisibility_failure,
                                         [&] { lift_pi2(f, c, first, spec2); });
                    else if (check_lift(o, tag2, f, c, lift_pi2(f, c, first, spec2)))
                        ++n.admissible;
                }
            }
        }
    }
    if (n.admissible == 0 || n.outside == 0 || n.divisibility == 0) o.fail("some lift category was never exercised");
    o.detail << instances << " instances, " << n.admissible << " admissible lifts, " << n.outside
             << " outside-interval and " << n.divisibility << " divisibility rejections";
}

// 7
void weight_intervals_check(Outcome& o)
{
    Gen g(kSeed);
    int checks = 0, mismatches = 0;
    std::vector<std::pair<std::string, Classification>> cls;
    std::vector<std::pair<SkewProduct, NewtonPolygon>> maps;
    for (auto& in : corpus()) {
        SkewProduct f = in.f();
        Classification c = classify(f);
        std::vector<Classification> list = in.boundary() ? c.alternatives : std::vector<Classification>{c};
        for (auto& x : list) {
            if (x.kind == Case::case1) continue;
            NewtonPolygon np = newton_polygon(f.q);
            auto support = f.q.support();
            WeightIntervals wi = weight_intervals(x, np, f.p.delta());

            std::vector<Rational> ls;
            for (auto e : {wi.i1.lo, wi.i1.hi})
                if (e.finite()) {
                    ls.push_back(e.value());
                    ls.push_back(e.value() + Rational(1, 997));
                    if (e.value() > Rational(1, 997)) ls.push_back(e.value() - Rational(1, 997));
                }
            while (ls.size() < 200) ls.push_back(g.rational(72, 12));

            auto oracle = [&](const Rational& l) {
                switch (x.kind) {
                case Case::case2: return in_If_case2(x, support, l);
                case Case::case3: return in_If_case3(x, support, l);
                default: return in_If1_case4(x, np, l);
                }
            };
            for (auto& l : ls) {
                ++checks;
                if (wi.i1.contains(l) != oracle(l)) {
                    ++mismatches;
                    o.fail(in.name + ": I_f membership differs at " + to_string(l));
                }
            }
            if (x.kind != Case::case4) continue;

            std::vector<Rational> firsts{x.l1.value()};
            for (auto& l : ls)
                if (in_If1_case4(x, np, l) && firsts.size() < 6) firsts.push_back(l);
            for (auto& lf : firsts) {
                Interval i2 = weight_interval_2(x, lf);
                std::vector<Rational> l2s;
                for (auto e : {i2.lo, i2.hi})
                    if (e.finite()) {
                        l2s.push_back(e.value());
                        l2s.push_back(e.value() + Rational(1, 997));
                        if (e.value() > Rational(1, 997)) l2s.push_back(e.value() - Rational(1, 997));
                    }
                while (l2s.size() < 200) l2s.push_back(g.rational(72, 12));
                for (auto& l : l2s) {
                    ++checks;
                    if (i2.contains(l) != in_If2_case4(x, support, lf, l)) {
                        ++mismatches;
                        o.fail(in.name + ": I_f^2 membership differs at " + to_string(l));
                    }
                }
            }
        }
    }
    o.detail << checks << " memberships, " << mismatches << " mismatches";
}

// 8
bool orbit_oracle(const Classification& c, double r, int n, double lz, double lw)
{
    for (int j = 0; j < n; ++j) {
        double nz = c.delta * lz;
        lw = c.gamma * lz + c.d * lw;
        lz = nz;
    }
    const double lr = std::log(r);
    const double l1 = c.l1.approx();
    if (!(lw < lr + l1 * lz)) return false;
    if (c.l2.finite()) {
        const double l2 = c.l2.approx();
        return (l1 + l2) * lz < l2 * lr + lw;
    }
    return lz < lr;
}

void basin_algebra(Outcome& o)
{
    Gen g(kSeed);
    const double r = 0.5;
    int points = 0, mismatches = 0, rchecks = 0;
    std::set<Case> cases;
    for (auto& in : select(single_vertex_ok)) {
        Classification c = classify(in.f());
        cases.insert(c.kind);
        for (int n = 0; n <= 8; ++n) {
            ExponentRegion reg = preimage_region(c, r, n);
            const double s = -std::log(r) / std::pow(double(c.delta), n);
            int got = 0;
            for (int attempt = 0; attempt < 100000 && got < 1000; ++attempt) {
                double lz = -s * std::pow(10.0, g.real(-2.0, 1.5));
                double hi = reg.upper->at(lz);
                double lo = reg.lower ? reg.lower->at(lz) : hi - 4.0 * std::max(1.0, std::abs(hi));
                if (!std::isfinite(hi) || !std::isfinite(lo)) continue;
                double width = std::max({std::abs(hi - lo), 0.5 * std::abs(hi), 1e-4});
                double lw = g.real(std::min(lo, hi) - width, std::max(lo, hi) + width);
                auto near = [](double a, double b) { return std::abs(a - b) < 1e-6 * std::max(1.0, std::abs(b)); };
                if (near(lw, hi) || (reg.lower && near(lw, lo))) continue;
                if (reg.z_bound && near(lz, *reg.z_bound)) continue;
                ++got;
                if (reg.contains_log(lz, lw) != orbit_oracle(c, r, n, lz, lw)) {
                    ++mismatches;
                    o.fail(in.name + " n=" + std::to_string(n) + ": closed form and orbit disagree");
                }
            }
            points += got;
            if (got < 1000) o.fail(in.name + ": could not place 1000 separated points");
        }

        std::vector<ExtRational> starts{ExtRational(0), c.l1, c.l2, ExtRational::pos_inf()};
        for (int t = 0; t < 8; ++t) starts.push_back(ExtRational(g.rational(20, 10)));
        for (auto& a : starts) {
            ExtRational it = a;
            for (int n = 0; n <= 32; ++n) {
                ++rchecks;
                if (R_pow(a, n, c.delta, c.gamma, c.d) != it)
                    o.fail(in.name + ": R_pow differs from iterated R_map at n=" + std::to_string(n));
                it = R_map(it, c.delta, c.gamma, c.d);
            }
        }
    }
    if (cases.size() != 4) o.fail("not every case was exercised");
    o.detail << points << " points, " << mismatches << " mismatches, " << rchecks << " R_pow checks";
}

// 9
void deck(Outcome& o)
{
    Gen g(kSeed);
    int n = 0, syms = 0;
    for (auto& in : select(verifiable_d2)) {
        SkewProduct f = in.f();
        Classification c = classify(f);
        MonomialMap m = MonomialMap::of(f, c);
        auto list = deck_symmetries(m);
        syms += static_cast<int>(list.size());
        if (static_cast<int>(list.size()) != (c.delta - 1) * (c.d - 1)) o.fail(in.name + ": wrong symmetry count");
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (std::abs(list[i].c1 - list[j].c1) + std::abs(list[i].c2 - list[j].c2) < 1e-9)
                    o.fail(in.name + ": repeated symmetry");
        for (auto& s : list) {
            if (std::abs(ipow(s.c1, c.delta - 1) - 1.0) > 1e-12) o.fail(in.name + ": c1^(delta-1) != 1");
            if (std::abs(ipow(s.c1, c.gamma) * ipow(s.c2, c.d - 1) - 1.0) > 1e-12)
                o.fail(in.name + ": c1^gamma c2^(d-1) != 1");
            for (int t = 0; t < 100; ++t) {
                cplx z = g.polar(g.real(-2.0, 0.0)), w = g.polar(g.real(-2.0, 0.0));
                auto [a, b] = m(s.c1 * z, s.c2 * w);
                auto [u, v] = m(z, w);
                if (std::abs(a - s.c1 * u) > 1e-12 * std::abs(u) || std::abs(b - s.c2 * v) > 1e-12 * std::abs(v))
                    o.fail(in.name + ": symmetry does not commute with f0");
            }
        }
        ++n;
    }
    o.detail << n << " instances, " << syms << " symmetries";
}

// 10
void fiber(Outcome& o)
{
    int n = 0;
    double worst = 0.0;
    for (auto& in : corpus()) {
        if (in.kind != Case::case1 || in.gamma != 0) continue;
        bool fibered = true;
        std::map<int, cplx> fq;
        for (auto& [e, v] : in.q) {
            if (e.first != 0) fibered = false;
            fq[e.second] = v;
        }
        if (!fibered) continue;
        SkewProduct f = in.f();
        Classification c = classify(f);
        UniPoly qf(fq);
        RadiusSearch rs = search_radius(f, c, halving_grid(0.4, 8), 0.1, 1024, kSeed);
        if (rs.accepted < 0) {
            o.fail(in.name + ": no radius accepted");
            continue;
        }
        for (auto [z, w] : sample(WedgeRegion::of(c, rs.r()), 100, kSeed + 5)) {
            cplx a = bottcher_evaluate(f, c, z, w).phi_w;
            cplx b = bottcher_1d(qf, w).phi;
            worst = std::max(worst, std::abs(a - b));
            if (std::abs(a - b) > 1e-8) o.fail(in.name + ": fiber coordinate differs from the 1-D one");
        }
        ++n;
    }
    if (n < 2) o.fail("fewer than two fibered instances");
    o.detail << n << " instances, max difference " << worst;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        double budget;  // seconds, 0 when unbudgeted
        void (*run)(Outcome&);
    };
    const Criterion all[] = {
        {1, "newton polygon matches the brute-force hull", 5.0, newton_oracle},
        {2, "classification of the curated corpus", 0.0, classification},
        {3, "dominance and forward invariance on U_r", 30.0, dominance},
        {4, "bottcher increments, residual and a-priori bound", 60.0, bottcher_bounds},
        {5, "d = 1 contraction, decay exponent and boundary guard", 0.0, d1_path},
        {6, "blow-up lifts", 0.0, lifts},
        {7, "weight intervals against their inequalities", 0.0, weight_intervals_check},
        {8, "preimage regions against forward orbits", 0.0, basin_algebra},
        {9, "deck symmetries", 0.0, deck},
        {10, "fiber consistency with the 1-D coordinate", 0.0, fiber},
    };
    int failed = 0;
    for (auto& cr : all) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.budget > 0 && secs > cr.budget) o.fail("runtime over " + std::to_string(cr.budget) + " s");
        std::printf("%s criterion %d: %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", cr.id, cr.title,
                    o.detail.str().c_str(), secs);
        for (auto& p : o.problems) std::printf("    %s\n", p.c_str());
        if (!o.pass) ++failed;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
