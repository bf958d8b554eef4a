#include "skewdyn/bottcher.hpp"

#include "skewdyn/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace skew {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx principal_log(cplx x)
{
    if (x == cplx{}) throw Error(errc::division_near_zero, "log of zero");
    return std::log(x);
}

// keep imaginary parts in (-pi, pi]; exp() and every later step are unchanged
cplx reduce(cplx x)
{
    double im = std::remainder(x.imag(), kTwoPi);
    return {x.real(), im};
}

struct Step {
    cplx e1;  // log(1 + zeta)
    cplx e2;  // log(1 + eta)
};

Step defect(const SkewProduct& f, const Classification& c, LogPoint x)
{
    cplx zt = zeta_log(f.p, x.Z);
    cplx et = eta_log(f, c, x.Z, x.W);
    if (!(std::abs(zt) < 1.0) || !(std::abs(et) < 1.0))
        throw Error(errc::branch_domain, "|zeta| or |eta| >= 1 along the orbit");
    return {std::log(1.0 + zt), std::log(1.0 + et)};
}

// Runs the log iteration; stops after n_max steps or once an increment drops below tol.
BottcherResult iterate(const SkewProduct& f, const Classification& c, LogPoint x, double tol, int n_max)
{
    const double delta = f.p.delta(), d = c.d, gamma = c.gamma;
    const cplx la = principal_log(f.p.leading()), lb = principal_log(c.b);
    BottcherResult res;
    res.Phi = x;
    double A = 1.0, B = 1.0, G = 0.0;  // 1/delta^j, 1/d^j, gamma_j/(delta d)^j
    for (int j = 1; j <= n_max; ++j) {
        Step s = defect(f, c, x);
        A /= delta;
        G = G / d + gamma * A / d;
        B /= d;
        cplx d1 = A * s.e1;
        cplx d2 = B * s.e2 - G * s.e1;
        res.Phi.Z += d1;
        res.Phi.W += d2;
        res.inc_z.push_back(std::abs(d1));
        res.inc_w.push_back(std::abs(d2));
        res.increments.push_back(std::max(std::abs(d1), std::abs(d2)));
        res.iterations = j;
        if (res.increments.back() < tol) {
            res.converged = true;
            break;
        }
        LogPoint next{delta * x.Z + la + s.e1, gamma * x.Z + d * x.W + lb + s.e2};
        x = {reduce(next.Z), reduce(next.W)};
    }
    res.phi_z = std::exp(res.Phi.Z);
    res.phi_w = std::exp(res.Phi.W);
    return res;
}

LogPoint to_log(cplx z, cplx w) { return {principal_log(z), principal_log(w)}; }

cplx root_of_unity(const Rational& turn)
{
    if (turn == 0) return {1.0, 0.0};
    if (turn == Rational(1, 2)) return {-1.0, 0.0};
    if (turn == Rational(1, 4)) return {0.0, 1.0};
    if (turn == Rational(3, 4)) return {0.0, -1.0};
    return std::polar(1.0, kTwoPi * to_double(turn));
}

Rational frac(const Rational& x)
{
    Integer fl = numerator_of(x) / denominator_of(x);
    Rational out = x - Rational(fl);
    if (out < 0) out += 1;
    return out;
}

}  // namespace

MonomialMap MonomialMap::of(const SkewProduct& f, const Classification& c)
{
    return {f.p.leading(), f.p.delta(), c.b, c.gamma, c.d};
}

Point MonomialMap::operator()(cplx z, cplx w) const
{
    return {a * std::pow(z, delta), b * std::pow(z, gamma) * std::pow(w, d)};
}

Bottcher1D bottcher_1d(const UniPoly& p, cplx z, double tol, int n_max)
{
    Bottcher1D out;
    if (z == cplx{}) {
        out.converged = true;
        return out;
    }
    const double delta = p.delta();
    const cplx la = principal_log(p.leading());
    auto run = [&](cplx z0, Bottcher1D& res) {
        cplx Z = principal_log(z0), Phi = Z;
        double A = 1.0;
        for (int j = 1; j <= n_max; ++j) {
            cplx zt = zeta_log(p, Z);
            if (!(std::abs(zt) < 1.0)) throw Error(errc::branch_domain, "|zeta| >= 1 along the orbit");
            cplx e = std::log(1.0 + zt);
            A /= delta;
            Phi += A * e;
            res.increments.push_back(std::abs(A * e));
            res.iterations = j;
            if (res.increments.back() < tol) {
                res.converged = true;
                break;
            }
            cplx next = delta * Z + la + e;
            if (!(next.real() < Z.real())) throw Error(errc::no_contraction, "orbit does not decay");
            Z = reduce(next);
        }
        res.phi = std::exp(Phi);
    };
    run(z, out);
    if (!out.converged) throw Error(errc::no_contraction, "orbit did not settle within n_max steps");
    cplx pz = p(z);
    if (pz == cplx{}) {
        out.residual = std::abs(p.leading() * std::pow(out.phi, p.delta()));
        return out;
    }
    Bottcher1D image;
    run(pz, image);
    out.residual = std::abs(image.phi - p.leading() * std::pow(out.phi, p.delta()));
    return out;
}

LogPoint log_lift_step(const SkewProduct& f, const Classification& c, LogPoint x)
{
    Step s = defect(f, c, x);
    const cplx la = principal_log(f.p.leading()), lb = principal_log(c.b);
    return {double(f.p.delta()) * x.Z + la + s.e1, double(c.gamma) * x.Z + double(c.d) * x.W + lb + s.e2};
}

LogPoint log_iterate(const SkewProduct& f, const Classification& c, int n, LogPoint x)
{
    if (n == 0) return x;
    return iterate(f, c, x, 0.0, n).Phi;
}

Point phi_n(const SkewProduct& f, const Classification& c, int n, cplx z, cplx w)
{
    require_verifiable(c);
    const double delta = f.p.delta(), d = c.d, gamma = c.gamma;
    cplx zj = z, wj = w, prod1{1.0, 0.0}, prod2{1.0, 0.0};
    double A = 1.0, B = 1.0, G = 0.0;
    for (int j = 1; j <= n; ++j) {
        cplx zt = f.p.zeta(zj);
        cplx et = eta(f, c, zj, wj);
        if (!(std::abs(zt) < 1.0) || !(std::abs(et) < 1.0))
            throw Error(errc::branch_domain, "|zeta| or |eta| >= 1 along the orbit");
        A /= delta;
        G = G / d + gamma * A / d;
        B /= d;
        cplx lz = std::log(1.0 + zt), le = std::log(1.0 + et);
        prod1 *= std::exp(A * lz);
        prod2 *= std::exp(B * le) / std::exp(G * lz);
        auto [zn, wn] = f(zj, wj);
        zj = zn;
        wj = wn;
    }
    return {z * prod1, w * prod2};
}

BottcherResult bottcher_evaluate(const SkewProduct& f, const Classification& c, cplx z, cplx w, double tol,
                                 int n_max)
{
    require_verifiable(c);
    if (z == cplx{} || w == cplx{})
        throw Error(errc::invalid_input, "points on zw = 0 are not evaluated; phi extends there by continuity");
    BottcherResult res = iterate(f, c, to_log(z, w), tol, n_max);
    if (!res.converged)
        throw Error(errc::no_convergence, "increments still above tol after n_max steps");

    auto [fz, fw] = f(z, w);
    BottcherResult image = iterate(f, c, to_log(fz, fw), tol, n_max);
    auto [tz, tw] = MonomialMap::of(f, c)(res.phi_z, res.phi_w);
    double dz = std::abs(image.phi_z - tz), dw = std::abs(image.phi_w - tw);
    res.residual = std::max(dz, dw) / std::max(std::abs(tz), std::abs(tw));
    res.residual_componentwise = std::max(dz / std::abs(tz), dw / std::abs(tw));
    return res;
}

double apriori_constant(const Classification& c)
{
    if (c.d < 2) throw Error(errc::guard_violation, "the a-priori bound needs d >= 2");
    const double delta = c.delta, d = c.d, gamma = c.gamma;
    if (c.delta == c.d) return 1.0 / (d - 1.0) + gamma / ((d - 1.0) * (d - 1.0));
    return std::max(1.0 / (delta - 1.0),
                    1.0 / (d - 1.0) + gamma / (delta - d) * (1.0 / (d - 1.0) - 1.0 / (delta - 1.0)));
}

ContractionReport d1_contraction_check(const SkewProduct& f, const Classification& c, double r, int n,
                                       int count, std::uint64_t seed)
{
    require_verifiable(c);
    if (c.d != 1) throw Error(errc::guard_violation, "contraction check applies to d = 1");
    ContractionReport rep;
    rep.n = n;
    rep.samples = count;
    rep.inside.assign(n, 0);
    // orbits in log coordinates
    for (auto [z, w] : sample(WedgeRegion::of(c, r), count, seed)) {
        LogPoint x = to_log(z, w);
        bool ok = true;
        for (int j = 1; j <= n; ++j) {
            try {
                x = log_lift_step(f, c, x);
            } catch (const Error& e) {
                if (e.code() != errc::branch_domain) throw;
                ok = false;
                break;
            }
            if (WedgeRegion::of(c, std::ldexp(r, -j)).contains_log(x.Z.real(), x.W.real()))
                ++rep.inside[j - 1];
            else
                ok = false;
        }
        if (!ok) rep.violations.emplace_back(z, w);
    }
    return rep;
}

Rational exponent_M(const Classification& c, const NewtonPolygon& np, int delta)
{
    if (c.d != 1) throw Error(errc::guard_violation, "M is defined for d = 1");
    if (c.kind != Case::case4) return Rational(1);
    const Rational& l1 = c.l1.value();
    Rational gt = c.gamma + l1 * c.d - l1 * delta;
    Rational best(1);
    for (auto& [n, m] : np.vertices) {
        Rational nt = n + l1 * m - l1 * delta;
        if (nt > gt) best = std::min(best, Rational(nt - gt));
    }
    return best;
}

WedgeRegion injectivity_region(const Classification& c, double r, double eps)
{
    if (c.d < 1) throw Error(errc::guard_violation, "injectivity region needs d >= 1");
    if (eps < 0) throw Error(errc::invalid_input, "eps must be >= 0");
    WedgeRegion u = WedgeRegion::of(c, r);
    const double et = std::log1p(eps);
    if (c.l2.finite()) {
        double C = std::max(1.0 / c.d, c.l2.approx() / (2.0 * c.delta));
        u.shrink_w = 2.0 * C * et;
    } else {
        u.shrink_w = 2.0 * et / c.d;
        u.shrink_z = 2.0 * et / c.delta;
    }
    double zmax = u.log_zmax();
    if (!std::isfinite(zmax) || zmax < -700.0)
        throw Error(errc::empty_region, "shrunken wedge is empty in double range");
    return u;
}

std::vector<DeckSymmetry> deck_symmetries(const MonomialMap& m)
{
    if (m.d < 2) throw Error(errc::guard_violation, "deck symmetries need d >= 2");
    std::vector<DeckSymmetry> out;
    for (int i = 0; i < m.delta - 1; ++i) {
        Rational t1(i, m.delta - 1);
        for (int j = 0; j < m.d - 1; ++j) {
            Rational t2 = frac((Rational(j) - m.gamma * t1) / (m.d - 1));
            out.push_back({root_of_unity(t1), root_of_unity(t2), t1, t2});
        }
    }
    return out;
}

}  // namespace skew
