#pragma once

#include "skewdyn/newton.hpp"
#include "skewdyn/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skew {

struct CoveringSpec {
    enum class Kind { pi1, pi2 };
    Kind kind = Kind::pi1;
    int r = 1;
    int s = 1;

    // weight s/r; validates gcd(r, s) = 1, r >= 1, s >= 0
    static CoveringSpec make(Kind kind, const Rational& weight);
    Rational weight() const { return Rational(s, r); }
};

// Monomial covering (x, y) -> (x^M00 y^M01, x^M10 y^M11)
using IntMatrix = std::array<std::array<long, 2>, 2>;
using RatMatrix = std::array<std::array<Rational, 2>, 2>;
using LaurentPoly = std::map<std::pair<long, long>, cplx>;

// Lifted map in monomial-times-unit form. Component k equals
//   coeff[k] * x^E[k][0] * y^E[k][1] * (1 + zeta_t)^minv[k][0] * (1 + eta_t)^minv[k][1]
// with principal branches, so that pi o lift = f o pi.
struct LiftedMap {
    std::vector<CoveringSpec> stages;
    IntMatrix M{};
    RatMatrix minv;
    IntMatrix E{};
    std::array<cplx, 2> coeff{};
    LaurentPoly zeta_t;
    LaurentPoly eta_t;
    std::optional<BiPoly> q_tilde;  // b x^E[1] (1 + eta_t) as a polynomial
    long degree = 1;                // |det M|

    std::pair<cplx, cplx> operator()(cplx x, cplx y) const;
    std::pair<cplx, cplx> project(cplx x, cplx y) const;
    bool eta_polynomial() const;  // every eta_t exponent nonnegative
};

LiftedMap lift_pi1(const SkewProduct& f, const Classification& c, const CoveringSpec& spec);
LiftedMap lift_pi2(const SkewProduct& f, const Classification& c, const CoveringSpec& spec);
LiftedMap lift_pi2(const SkewProduct& f, const Classification& c, const LiftedMap& first,
                   const CoveringSpec& spec);

struct OriginReport {
    bool integral_nonnegative = false;
    bool fixed = false;        // no component has a constant monomial
    bool nilpotent = false;    // linear part has both eigenvalues zero
    bool first_ge_second = false;  // E[0][0] >= E[1][1]
    bool second_ge_d = false;      // E[1][1] >= d
    bool superattracting() const { return integral_nonnegative && fixed && nilpotent; }
};

OriginReport lifted_origin_type(const LiftedMap& lm, int d);

// max over points of |pi(lift(x)) - f(pi(x))| / (1 + |f(pi(x))|), on points where the units are defined
struct SemiconjugacyReport {
    double max_defect = 0.0;
    double max_relative = 0.0;  // componentwise |defect_k| / |f_k(pi(x))|
    int points = 0;
    double radius = 0.0;
};
SemiconjugacyReport check_semiconjugacy(const SkewProduct& f, const LiftedMap& lm, int count,
                                        std::uint64_t seed);

}  // namespace skew
