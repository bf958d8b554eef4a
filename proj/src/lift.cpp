#include "skewdyn/lift.hpp"

#include "skewdyn/error.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace skew {

namespace {

cplx ipow(cplx x, long n)
{
    if (n < 0) return 1.0 / ipow(x, -n);
    cplx acc{1.0, 0.0};
    for (; n > 0; --n) acc *= x;
    return acc;
}

cplx eval_laurent(const LaurentPoly& s, cplx x, cplx y)
{
    cplx acc{};
    for (auto& [e, c] : s) acc += c * ipow(x, e.first) * ipow(y, e.second);
    return acc;
}

RatMatrix inverse(const IntMatrix& m)
{
    Rational det = Rational(m[0][0]) * m[1][1] - Rational(m[0][1]) * m[1][0];
    if (det == 0) throw Error(errc::invalid_input, "singular covering");
    RatMatrix out;
    out[0][0] = Rational(m[1][1]) / det;
    out[0][1] = Rational(-m[0][1]) / det;
    out[1][0] = Rational(-m[1][0]) / det;
    out[1][1] = Rational(m[0][0]) / det;
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

void require_member(const Interval& iv, const Rational& w, const std::string& what)
{
    if (!iv.contains(w))
        throw Error(errc::weight_outside_interval,
                    "weight " + to_string(w) + " is outside " + what + " = " + iv.str());
}

// Build the lift of f through the covering with matrix M.
LiftedMap build(const SkewProduct& f, const Classification& c, const IntMatrix& M, bool expect_polynomial)
{
    LiftedMap lm;
    lm.M = M;
    lm.minv = inverse(M);
    lm.degree = std::abs(M[0][0] * M[1][1] - M[0][1] * M[1][0]);
    const long delta = f.p.delta();

    // E = M^-1 L M with L = [[delta, 0], [gamma, d]]
    IntMatrix LM{};
    LM[0][0] = delta * M[0][0];
    LM[0][1] = delta * M[0][1];
    LM[1][0] = c.gamma * M[0][0] + c.d * M[1][0];
    LM[1][1] = c.gamma * M[0][1] + c.d * M[1][1];
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Rational e = lm.minv[i][0] * LM[0][j] + lm.minv[i][1] * LM[1][j];
            if (!is_integer(e))
                throw Error(errc::divisibility_failure,
                            "lifted exponent " + to_string(e) + " is not an integer; covering is not well-defined");
            if (e < 0) throw Error(errc::weight_outside_interval, "lifted exponent " + to_string(e) + " is negative");
            lm.E[i][j] = e.convert_to<long>();
        }
    }

    const cplx a = f.p.leading();
    for (auto& [k, ak] : f.p.coeffs()) {
        if (k == f.p.delta()) continue;
        long t = k - delta;
        lm.zeta_t[{t * M[0][0], t * M[0][1]}] += ak / a;
    }
    for (auto& [e, bij] : f.q.coeffs()) {
        if (e.first == c.gamma && e.second == c.d) continue;
        long di = e.first - c.gamma, dj = e.second - c.d;
        std::pair<long, long> ex{di * M[0][0] + dj * M[1][0], di * M[0][1] + dj * M[1][1]};
        if (expect_polynomial && (ex.first < 0 || ex.second < 0))
            throw Error(errc::weight_outside_interval, "lifted unit has a negative exponent");
        lm.eta_t[ex] += bij / c.b;
    }

    const cplx la = std::log(a), lb = std::log(c.b);
    for (int k = 0; k < 2; ++k)
        lm.coeff[k] = std::exp(to_double(lm.minv[k][0]) * la + to_double(lm.minv[k][1]) * lb);

    std::map<Exponent, cplx> qt;
    bool nonneg = true;
    qt[{int(lm.E[1][0]), int(lm.E[1][1])}] += c.b;
    for (auto& [ex, v] : lm.eta_t) {
        long x = lm.E[1][0] + ex.first, y = lm.E[1][1] + ex.second;
        if (x < 0 || y < 0) {
            nonneg = false;
            break;
        }
        qt[{int(x), int(y)}] += v * c.b;
    }
    if (nonneg) lm.q_tilde = BiPoly(std::move(qt), false);
    return lm;
}

}  // namespace

CoveringSpec CoveringSpec::make(Kind kind, const Rational& weight)
{
    if (weight < 0) throw Error(errc::invalid_input, "covering weight must be >= 0");
    CoveringSpec spec;
    spec.kind = kind;
    spec.s = numerator_of(weight).convert_to<int>();
    spec.r = denominator_of(weight).convert_to<int>();
    return spec;
}

bool LiftedMap::eta_polynomial() const
{
    return std::all_of(eta_t.begin(), eta_t.end(),
                       [](auto& kv) { return kv.first.first >= 0 && kv.first.second >= 0; });
}

std::pair<cplx, cplx> LiftedMap::operator()(cplx x, cplx y) const
{
    cplx zt = eval_laurent(zeta_t, x, y);
    cplx et = eval_laurent(eta_t, x, y);
    if (!(std::abs(zt) < 1.0) || !(std::abs(et) < 1.0))
        throw Error(errc::branch_domain, "lifted unit leaves the principal-branch disk");
    cplx lz = std::log(1.0 + zt), le = std::log(1.0 + et);
    std::array<cplx, 2> out;
    for (int k = 0; k < 2; ++k) {
        cplx unit = std::exp(to_double(minv[k][0]) * lz + to_double(minv[k][1]) * le);
        out[k] = coeff[k] * ipow(x, E[k][0]) * ipow(y, E[k][1]) * unit;
    }
    return {out[0], out[1]};
}

std::pair<cplx, cplx> LiftedMap::project(cplx x, cplx y) const
{
    return {ipow(x, M[0][0]) * ipow(y, M[0][1]), ipow(x, M[1][0]) * ipow(y, M[1][1])};
}

LiftedMap lift_pi1(const SkewProduct& f, const Classification& c, const CoveringSpec& spec)
{
    if (spec.kind != CoveringSpec::Kind::pi1) throw Error(errc::invalid_input, "expected a pi1 covering");
    if (spec.r < 1 || spec.s < 0 || boost::integer::gcd(spec.r, spec.s) != 1)
        throw Error(errc::invalid_input, "covering weight s/r must be in lowest terms");
    const NewtonPolygon np = newton_polygon(f.q);
    switch (c.kind) {
    case Case::case1:
        require_member(Interval::point(ExtRational(0)), spec.weight(), "the Case 1 weight");
        break;
    case Case::case2:
        require_member(weight_intervals(c, np, f.p.delta()).i1, spec.weight(), "I_f");
        break;
    case Case::case4:
        require_member(weight_intervals(c, np, f.p.delta()).i1, spec.weight(), "I_f^1");
        break;
    default:
        throw Error(errc::guard_violation, std::string("pi1 lift is not defined for ") + case_name(c.kind));
    }
    IntMatrix M{{{spec.r, 0}, {spec.s, 1}}};
    LiftedMap lm = build(f, c, M, c.kind != Case::case4);
    lm.stages = {spec};
    return lm;
}

LiftedMap lift_pi2(const SkewProduct& f, const Classification& c, const CoveringSpec& spec)
{
    if (spec.kind != CoveringSpec::Kind::pi2) throw Error(errc::invalid_input, "expected a pi2 covering");
    if (spec.r < 1 || spec.s < 1 || boost::integer::gcd(spec.r, spec.s) != 1)
        throw Error(errc::invalid_input, "covering weight s/r must be positive and in lowest terms");
    if (c.kind != Case::case3)
        throw Error(errc::guard_violation, "a single pi2 lift needs Case 3; Case 4 lifts by pi1 first");
    const NewtonPolygon np = newton_polygon(f.q);
    require_member(weight_intervals(c, np, f.p.delta()).i1, spec.weight(), "I_f");
    if (c.gamma % spec.s != 0)
        throw Error(errc::divisibility_failure,
                    "gamma/s = " + std::to_string(c.gamma) + "/" + std::to_string(spec.s) + " is not an integer");
    IntMatrix M{{{1, spec.r}, {0, spec.s}}};
    LiftedMap lm = build(f, c, M, true);
    lm.stages = {spec};
    return lm;
}

LiftedMap lift_pi2(const SkewProduct& f, const Classification& c, const LiftedMap& first,
                   const CoveringSpec& spec)
{
    if (spec.kind != CoveringSpec::Kind::pi2) throw Error(errc::invalid_input, "expected a pi2 covering");
    if (spec.r < 1 || spec.s < 1 || boost::integer::gcd(spec.r, spec.s) != 1)
        throw Error(errc::invalid_input, "covering weight s/r must be positive and in lowest terms");
    if (c.kind != Case::case4 || first.stages.size() != 1 || first.stages[0].kind != CoveringSpec::Kind::pi1)
        throw Error(errc::guard_violation, "second-stage pi2 needs a Case 4 map lifted once by pi1");
    const CoveringSpec& s1 = first.stages[0];
    // Case 3 interval of the first lift is r1 * I_f^2
    Interval i2 = weight_interval_2(c, s1.weight());
    require_member(i2, spec.weight() / s1.r, "I_f^2(" + to_string(s1.weight()) + ") after rescaling by r1");
    long gamma_t = first.E[1][0];
    if (gamma_t % spec.s != 0)
        throw Error(errc::divisibility_failure, "lifted gamma/s2 = " + std::to_string(gamma_t) + "/" +
                                                    std::to_string(spec.s) + " is not an integer");
    IntMatrix M2{{{1, spec.r}, {0, spec.s}}};
    LiftedMap lm = build(f, c, multiply(first.M, M2), true);
    lm.stages = {s1, spec};
    return lm;
}

OriginReport lifted_origin_type(const LiftedMap& lm, int d)
{
    OriginReport rep;
    rep.integral_nonnegative = lm.E[0][0] >= 0 && lm.E[0][1] >= 0 && lm.E[1][0] >= 0 && lm.E[1][1] >= 0 &&
                               lm.eta_polynomial();
    rep.fixed = !(lm.E[0][0] == 0 && lm.E[0][1] == 0) && !(lm.E[1][0] == 0 && lm.E[1][1] == 0);
    cplx J[2][2] = {};
    for (int k = 0; k < 2; ++k) {
        if (lm.E[k][0] == 1 && lm.E[k][1] == 0) J[k][0] = lm.coeff[k];
        if (lm.E[k][0] == 0 && lm.E[k][1] == 1) J[k][1] = lm.coeff[k];
    }
    cplx tr = J[0][0] + J[1][1], det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    rep.nilpotent = rep.fixed && tr == cplx{} && det == cplx{};
    rep.first_ge_second = lm.E[0][0] >= lm.E[1][1];
    rep.second_ge_d = lm.E[1][1] >= d;
    return rep;
}

SemiconjugacyReport check_semiconjugacy(const SkewProduct& f, const LiftedMap& lm, int count, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    SemiconjugacyReport rep;
    for (double rho = 0.5; rho > 1e-6; rho *= 0.5) {
        std::vector<std::pair<cplx, cplx>> pts;
        for (int attempt = 0; attempt < 8 * count && static_cast<int>(pts.size()) < count; ++attempt) {
            cplx x = std::polar(rho * std::pow(1e-2, unit(gen)), phase(gen));
            cplx y = std::polar(rho * std::pow(1e-2, unit(gen)), phase(gen));
            if (std::abs(eval_laurent(lm.zeta_t, x, y)) < 0.5 && std::abs(eval_laurent(lm.eta_t, x, y)) < 0.5)
                pts.emplace_back(x, y);
        }
        if (static_cast<int>(pts.size()) < count) continue;
        rep.radius = rho;
        rep.points = count;
        for (auto [x, y] : pts) {
            auto [u, v] = lm(x, y);
            auto lhs = lm.project(u, v);
            auto [z, w] = lm.project(x, y);
            auto rhs = f(z, w);
            double d1 = std::abs(lhs.first - rhs.first), d2 = std::abs(lhs.second - rhs.second);
            double scale = 1.0 + std::max(std::abs(rhs.first), std::abs(rhs.second));
            rep.max_defect = std::max(rep.max_defect, std::max(d1, d2) / scale);
            rep.max_relative = std::max({rep.max_relative, d1 / std::abs(rhs.first), d2 / std::abs(rhs.second)});
        }
        return rep;
    }
    return rep;
}

}  // namespace skew
