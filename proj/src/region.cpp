#include "skewdyn/region.hpp"

#include "skewdyn/error.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

namespace skew {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLogFloor = -700.0;  // exp() stays normal above this
constexpr double kZSpan = 6.907755278982137;   // log(1e3)
constexpr double kWSpan = 9.210340371976184;   // log(1e4), used when l2 = inf

double log_abs(cplx x) { return x == cplx{} ? kNegInf : std::log(std::abs(x)); }

// e * lz with the convention 0 * (-inf) = 0
double scaled(double e, double lz) { return e == 0.0 ? 0.0 : e * lz; }

cplx ipow(cplx x, int n)
{
    if (n < 0) return 1.0 / ipow(x, -n);
    cplx acc{1.0, 0.0};
    for (; n > 0; --n) acc *= x;
    return acc;
}

}  // namespace

void parallel_for(int n, int threads, const std::function<void(int)>& fn)
{
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex mu;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < n; i += threads) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

WedgeRegion WedgeRegion::of(const Classification& c, double r)
{
    WedgeRegion u;
    u.l1 = c.l1;
    u.l2 = c.l2;
    u.r = r;
    return u;
}

double WedgeRegion::log_upper(double lz) const
{
    return std::log(r) - shrink_w + scaled(l1.approx(), lz);
}

double WedgeRegion::log_lower(double lz) const
{
    if (!l2.finite()) return kNegInf;
    return scaled((l1 + l2).approx(), lz) - l2.approx() * std::log(r) + shrink_w;
}

double WedgeRegion::log_zmax() const
{
    if (!l2.finite()) return std::log(r) - shrink_z;
    double L2 = l2.approx();
    return ((1.0 + L2) * std::log(r) - 2.0 * shrink_w) / L2;
}

bool WedgeRegion::contains_log(double lz, double lw) const
{
    if (!(lz < log_zmax())) return false;
    return lw < log_upper(lz) && log_lower(lz) < lw;
}

bool WedgeRegion::contains(cplx z, cplx w) const { return contains_log(log_abs(z), log_abs(w)); }

std::vector<Point> sample(const WedgeRegion& u, int count, std::uint64_t seed)
{
    if (count < 1) throw Error(errc::invalid_input, "sample count must be >= 1");
    const double xmax = u.log_zmax();
    if (!std::isfinite(xmax) || xmax - kZSpan < kLogFloor)
        throw Error(errc::empty_band, "wedge |z| band leaves double range");

    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<Point> out;
    out.reserve(count);
    int misses = 0;
    while (static_cast<int>(out.size()) < count) {
        double x = xmax - kZSpan * (0.001 + 0.999 * unit(gen));
        double hi = u.log_upper(x);
        double lo = u.l2.finite() ? u.log_lower(x) : hi - kWSpan;
        lo = std::max(lo, kLogFloor);
        if (hi <= lo) throw Error(errc::empty_band, "wedge |w| band is empty in double range");
        double y = lo + (hi - lo) * (0.001 + 0.998 * unit(gen));
        cplx z = std::polar(std::exp(x), phase(gen));
        cplx w = std::polar(std::exp(y), phase(gen));
        if (u.contains(z, w)) {
            out.emplace_back(z, w);
        } else if (++misses > 10 * count) {
            throw Error(errc::empty_band, "sampler cannot land inside the wedge");
        }
    }
    return out;
}

cplx eta(const SkewProduct& f, const Classification& c, cplx z, cplx w)
{
    double lm = scaled(c.gamma, log_abs(z)) + scaled(c.d, log_abs(w));
    if (!(lm > std::log(DBL_MIN))) throw Error(errc::division_near_zero, "|z^gamma w^d| underflows");
    cplx acc{};
    for (auto& [e, bij] : f.q.coeffs()) {
        if (e.first == c.gamma && e.second == c.d) continue;
        acc += (bij / c.b) * ipow(z, e.first - c.gamma) * ipow(w, e.second - c.d);
    }
    return acc;
}

cplx eta_log(const SkewProduct& f, const Classification& c, cplx Z, cplx W)
{
    cplx acc{};
    for (auto& [e, bij] : f.q.coeffs()) {
        if (e.first == c.gamma && e.second == c.d) continue;
        acc += (bij / c.b) * std::exp(double(e.first - c.gamma) * Z + double(e.second - c.d) * W);
    }
    return acc;
}

cplx zeta_log(const UniPoly& p, cplx Z)
{
    cplx acc{};
    const cplx a = p.leading();
    for (auto& [k, ak] : p.coeffs()) {
        if (k == p.delta()) continue;
        acc += (ak / a) * std::exp(double(k - p.delta()) * Z);
    }
    return acc;
}

void require_verifiable(const Classification& c)
{
    if (c.kind == Case::boundary)
        throw Error(errc::guard_violation, "delta equals an intercept T_k; pick one of the two alternatives");
    if (c.d == 0)
        throw Error(errc::guard_violation, "dominant vertex has d = 0; no monomial normal form to verify");
    if (c.d == 1 && c.on_boundary)
        throw Error(errc::guard_violation, "d = 1 requires delta != T_k for every k");
}

DominanceReport dominance_report(const SkewProduct& f, const Classification& c, double r, int count,
                                 std::uint64_t seed, int threads)
{
    require_verifiable(c);
    const WedgeRegion u = WedgeRegion::of(c, r);
    const auto pts = sample(u, count, seed);
    const cplx a = f.p.leading();
    const int delta = f.p.delta();

    std::vector<double> eta_abs(pts.size()), zeta_abs(pts.size()), rel(pts.size());
    std::vector<char> inside(pts.size());
    parallel_for(static_cast<int>(pts.size()), threads, [&](int i) {
        auto [z, w] = pts[i];
        cplx e = eta(f, c, z, w);
        cplx p0 = a * std::pow(z, delta);
        cplx q0 = c.b * std::pow(z, c.gamma) * std::pow(w, c.d);
        cplx pz = f.p(z), qzw = f.q(z, w);
        eta_abs[i] = std::abs(e);
        zeta_abs[i] = std::abs(f.p.zeta(z));
        rel[i] = std::max(std::abs(pz - p0), std::abs(qzw - q0)) / std::max(std::abs(p0), std::abs(q0));
        inside[i] = u.contains(pz, qzw);
    });

    DominanceReport rep;
    rep.r = r;
    rep.samples = count;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        rep.sup_eta = std::max(rep.sup_eta, eta_abs[i]);
        rep.sup_zeta = std::max(rep.sup_zeta, zeta_abs[i]);
        rep.sup_relative_f_error = std::max(rep.sup_relative_f_error, rel[i]);
        if (!inside[i]) rep.violations.push_back(pts[i]);
    }
    return rep;
}

std::vector<DominanceReport> verify_main_lemma(const SkewProduct& f, const Classification& c,
                                               const std::vector<double>& r_list, int count,
                                               std::uint64_t seed, int threads)
{
    std::vector<DominanceReport> out;
    for (double r : r_list) out.push_back(dominance_report(f, c, r, count, seed, threads));
    return out;
}

std::vector<double> halving_grid(double r0, int steps)
{
    std::vector<double> out;
    for (int k = 0; k < steps; ++k) out.push_back(std::ldexp(r0, -k));
    return out;
}

RadiusSearch search_radius(const SkewProduct& f, const Classification& c, const std::vector<double>& grid,
                           double eps_target, int count, std::uint64_t seed, int threads)
{
    RadiusSearch out;
    for (double r : grid) {
        out.reports.push_back(dominance_report(f, c, r, count, seed, threads));
        if (out.reports.back().passes(eps_target)) {
            out.accepted = static_cast<int>(out.reports.size()) - 1;
            break;
        }
    }
    return out;
}

}  // namespace skew
