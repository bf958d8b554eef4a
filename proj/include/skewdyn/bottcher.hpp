#pragma once

#include "skewdyn/newton.hpp"
#include "skewdyn/poly.hpp"
#include "skewdyn/region.hpp"

#include <cstdint>
#include <vector>

namespace skew {

struct MonomialMap {
    cplx a{1.0, 0.0};
    int delta = 2;
    cplx b{1.0, 0.0};
    int gamma = 0;
    int d = 2;

    static MonomialMap of(const SkewProduct& f, const Classification& c);
    Point operator()(cplx z, cplx w) const;
};

struct LogPoint {
    cplx Z;
    cplx W;
};

struct BottcherResult {
    cplx phi_z;
    cplx phi_w;
    LogPoint Phi;                 // log of phi, before exponentiation
    int iterations = 0;
    std::vector<double> increments;  // max(|dPhi1|, |dPhi2|) per step
    std::vector<double> inc_z;       // |Phi^1_{n} - Phi^1_{n-1}|
    std::vector<double> inc_w;       // |Phi^2_{n} - Phi^2_{n-1}|
    double residual = 0.0;           // ||phi(f(x)) - f0(phi(x))|| / ||f0(phi(x))||
    double residual_componentwise = 0.0;
    bool converged = false;
};

struct Bottcher1D {
    cplx phi;
    int iterations = 0;
    std::vector<double> increments;
    double residual = 0.0;  // |phi(p(z)) - a phi(z)^delta|
    bool converged = false;
};

Bottcher1D bottcher_1d(const UniPoly& p, cplx z, double tol = 1e-12, int n_max = 64);

// One application of the logarithmic lift F, coefficient logarithms included.
LogPoint log_lift_step(const SkewProduct& f, const Classification& c, LogPoint x);

// Phi_n = F0^-n o F^n, accumulated as x + sum_j L^-j (F - F0)(F^{j-1} x)
LogPoint log_iterate(const SkewProduct& f, const Classification& c, int n, LogPoint x);

// n-th approximant in the original coordinates via the product formula
Point phi_n(const SkewProduct& f, const Classification& c, int n, cplx z, cplx w);

BottcherResult bottcher_evaluate(const SkewProduct& f, const Classification& c, cplx z, cplx w,
                                 double tol = 1e-12, int n_max = 64);

// max{1/(delta-1), ...}: ||Phi - id|| < constant * log(1 + eps), d >= 2
double apriori_constant(const Classification& c);

struct ContractionReport {
    int n = 0;
    int samples = 0;
    std::vector<int> inside;  // inside[j-1]: orbits with f^j(x) in U_{r/2^j}
    std::vector<Point> violations;
    bool holds() const { return violations.empty(); }
};

ContractionReport d1_contraction_check(const SkewProduct& f, const Classification& c, double r, int n,
                                       int count, std::uint64_t seed);

Rational exponent_M(const Classification& c, const NewtonPolygon& np, int delta);

WedgeRegion injectivity_region(const Classification& c, double r, double eps);

struct DeckSymmetry {
    cplx c1;
    cplx c2;
    Rational turn1;  // c1 = exp(2 pi i turn1)
    Rational turn2;
};

std::vector<DeckSymmetry> deck_symmetries(const MonomialMap& m);

}  // namespace skew
