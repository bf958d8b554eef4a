#pragma once

#include "skewdyn/newton.hpp"
#include "skewdyn/poly.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace skew {

// U_r = { |z|^(l1+l2) < r^l2 |w|, |w| < r |z|^l1 }, with |z| < r when l2 = inf.
// shrink_w / shrink_z tighten the bounds by exp(-shrink) (used for the injectivity wedge).
struct WedgeRegion {
    Weight l1{0};
    Weight l2 = Weight::pos_inf();
    double r = 0.5;
    double shrink_w = 0.0;
    double shrink_z = 0.0;

    static WedgeRegion of(const Classification& c, double r);

    bool contains(cplx z, cplx w) const;
    bool contains_log(double lz, double lw) const;  // log|z|, log|w|
    double log_upper(double lz) const;               // log of the upper |w| bound
    double log_lower(double lz) const;               // -inf when l2 = inf
    double log_zmax() const;                         // sup of log|z| over the region
};

using Point = std::pair<cplx, cplx>;

std::vector<Point> sample(const WedgeRegion& u, int count, std::uint64_t seed);

cplx eta(const SkewProduct& f, const Classification& c, cplx z, cplx w);
// relative error of q against b z^gamma w^d, summed in log coordinates (no division)
cplx eta_log(const SkewProduct& f, const Classification& c, cplx Z, cplx W);
cplx zeta_log(const UniPoly& p, cplx Z);

struct DominanceReport {
    double r = 0.0;
    double sup_eta = 0.0;
    double sup_zeta = 0.0;
    double sup_relative_f_error = 0.0;
    int samples = 0;
    std::vector<Point> violations;  // samples x with f(x) outside U_r

    bool passes(double eps_target) const { return sup_eta < eps_target && violations.empty(); }
};

// guard for d = 1 (delta must avoid every intercept) and d = 0
void require_verifiable(const Classification& c);

DominanceReport dominance_report(const SkewProduct& f, const Classification& c, double r, int count,
                                 std::uint64_t seed, int threads = 1);
std::vector<DominanceReport> verify_main_lemma(const SkewProduct& f, const Classification& c,
                                               const std::vector<double>& r_list, int count,
                                               std::uint64_t seed, int threads = 1);

struct RadiusSearch {
    std::vector<DominanceReport> reports;
    int accepted = -1;  // index into reports, -1 when no radius passed
    double r() const { return accepted < 0 ? 0.0 : reports[accepted].r; }
};

std::vector<double> halving_grid(double r0, int steps);
RadiusSearch search_radius(const SkewProduct& f, const Classification& c, const std::vector<double>& grid,
                           double eps_target, int count, std::uint64_t seed, int threads = 1);

// run fn(i) for i in [0, n) on up to `threads` workers
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace skew
