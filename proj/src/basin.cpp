#include "skewdyn/basin.hpp"

#include "skewdyn/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace skew {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSpanZ = 6.907755278982137;  // log(1e3)
constexpr double kSpanW = 9.210340371976184;  // log(1e4)

double log_abs(cplx x) { return x == cplx{} ? -kInf : std::log(std::abs(x)); }

double scaled(double e, double lz) { return e == 0.0 ? 0.0 : e * lz; }

double ext_times(const ExtRational& e, double lz)
{
    if (e.finite()) return scaled(e.approx(), lz);
    if (lz == 0.0) return 0.0;
    bool pos = e.is_pos_inf() == (lz > 0.0);
    return pos ? kInf : -kInf;
}

// refuses Boundary and d = 0; d = 1 boundary alternatives have catalog entries
void require_single_vertex(const Classification& c)
{
    if (c.kind == Case::boundary)
        throw Error(errc::guard_violation, "delta equals an intercept T_k; pick one of the two alternatives");
    if (c.d == 0) throw Error(errc::guard_violation, "dominant vertex has d = 0");
}

[[noreturn]] void no_entry(const std::string& what)
{
    throw Error(errc::guard_violation, "no basin catalog entry: " + what);
}

LogBound bound(double log_coeff, const ExtRational& e) { return {log_coeff, e}; }

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

ExtRational R_map(const ExtRational& a, int delta, int gamma, int d)
{
    if (d < 1) throw Error(errc::invalid_input, "R needs d >= 1");
    return (a * Rational(delta) - ExtRational(gamma)) / Rational(d);
}

ExtRational alpha0(int delta, int gamma, int d)
{
    if (delta == d) return ExtRational::pos_inf();
    return ExtRational(make_rational(gamma, delta - d));
}

ExtRational R_pow(const ExtRational& a, int n, int delta, int gamma, int d)
{
    if (n < 0) throw Error(errc::invalid_input, "R^n needs n >= 0");
    if (d < 1) throw Error(errc::invalid_input, "R needs d >= 1");
    if (!a.finite() || n == 0) return a;
    if (delta == d) return ExtRational(a.value() - Rational(n) * gamma / d);
    Rational a0 = make_rational(gamma, delta - d);
    Rational ratio(boost::multiprecision::pow(Integer(delta), static_cast<unsigned>(n)),
                   boost::multiprecision::pow(Integer(d), static_cast<unsigned>(n)));
    return ExtRational(ratio * (a.value() - a0) + a0);
}

double LogBound::at(double lz) const { return log_coeff + ext_times(exponent, lz); }

bool ExponentRegion::contains_log(double lz, double lw) const
{
    if (z_bound && !(lz < *z_bound)) return false;
    if (upper && !(lw < upper->at(lz))) return false;
    if (lower && !(lower->at(lz) < lw)) return false;
    return true;
}

bool ExponentRegion::contains(cplx z, cplx w) const
{
    if (z_punctured && z == cplx{}) return false;
    if (w_punctured && w == cplx{}) return false;
    return contains_log(log_abs(z), log_abs(w));
}

std::string ExponentRegion::str() const
{
    std::ostringstream os;
    os << "{";
    if (z_punctured) os << " z!=0";
    if (w_punctured) os << " w!=0";
    if (z_bound) os << " log|z|<" << fmt(*z_bound);
    if (lower) os << " " << fmt(lower->log_coeff) << "+(" << lower->exponent.str() << ")log|z|<log|w|";
    if (upper) os << " log|w|<" << fmt(upper->log_coeff) << "+(" << upper->exponent.str() << ")log|z|";
    os << " }";
    return os.str();
}

ExponentRegion preimage_region(const Classification& c, double r, int n)
{
    require_single_vertex(c);
    if (n < 0) throw Error(errc::invalid_input, "n must be >= 0");
    const double lr = std::log(r);
    const double dn = std::pow(double(c.d), n), deltan = std::pow(double(c.delta), n);
    auto R = [&](const ExtRational& a) { return R_pow(a, n, c.delta, c.gamma, c.d); };
    ExponentRegion out;
    switch (c.kind) {
    case Case::case1:
        out.z_bound = lr / deltan;
        out.upper = bound(lr / dn, R(ExtRational(0)));
        break;
    case Case::case2:
        out.z_bound = lr / deltan;
        out.upper = bound(lr / dn, R(c.l1));
        out.w_punctured = true;
        break;
    case Case::case3:
        out.upper = bound(lr / dn, R(ExtRational(0)));
        out.lower = bound(-c.l2.approx() * lr / dn, R(c.l2));
        break;
    case Case::case4:
        out.upper = bound(lr / dn, R(c.l1));
        out.lower = bound(-c.l2.approx() * lr / dn, R(c.l1 + c.l2));
        out.w_punctured = true;
        break;
    case Case::boundary:
        break;
    }
    return out;
}

BasinDescriptor basin_descriptor(const Classification& c, const NewtonPolygon& np, double r)
{
    require_single_vertex(c);
    const int delta = c.delta, gamma = c.gamma, d = c.d, k = c.k_index;
    const Rational D(delta);
    const double lr = std::log(r);
    BasinDescriptor out;
    out.case_tag = c.kind;
    out.alpha0 = alpha0(delta, gamma, d);
    ExponentRegion& g = out.region;
    g.z_bound = 0.0;

    switch (c.kind) {
    case Case::case1:
        if (gamma == 0) {
            out.subcase = "iii";
            g.upper = bound(0.0, ExtRational(0));
        } else if (delta >= d) {
            out.subcase = "i";
        } else {
            out.subcase = "ii";
            g.upper = bound(0.0, out.alpha0);
        }
        break;
    case Case::case2: {
        // the intercept of the last finite-slope edge, T_{s-1}
        if (k < 2) no_entry("Case 2 needs s >= 2");
        const Rational& T = np.T(k - 1);
        if (delta < d) {
            out.subcase = "iv";
            g.z_punctured = true;
            g.upper = bound(0.0, out.alpha0);
        } else if (T == D && delta > d) {
            out.subcase = d >= 2 ? "i" : "ii";
            g.upper = bound(d >= 2 ? 0.0 : lr, c.l1);
        } else if (T > D && delta >= d) {
            out.subcase = "iii";
            g.z_punctured = true;
        } else {
            no_entry("Case 2 with T_{s-1} = " + to_string(T));
        }
        break;
    }
    case Case::case3:
        if (delta > d) {
            out.subcase = gamma > 0 ? "i" : "ii";
            g.w_punctured = true;
            if (gamma == 0) g.upper = bound(0.0, ExtRational(0));
        } else if (delta == d && gamma == 0) {
            out.subcase = "iii";
            g.z_bound.reset();
            g.upper = bound(0.0, ExtRational(0));
            g.lower = bound(0.0, c.l2);
        } else {
            no_entry("Case 3 with delta <= d, gamma > 0");
        }
        break;
    case Case::case4: {
        const Rational& Tprev = np.T(k - 1);
        const Rational& Tnext = np.T(k);
        if (!(Tnext > d) || Tprev < D || D < Tnext) no_entry("Case 4 ordering T_{k-1} >= delta >= T_k > d fails");
        if (Tprev == D) {
            out.subcase = d >= 2 ? "i" : "ii";
            g.w_punctured = true;
            g.upper = bound(d >= 2 ? 0.0 : lr, c.l1);
        } else if (Tnext == D) {
            out.subcase = d >= 2 ? "iv" : "v";
            g.z_punctured = true;
            g.lower = bound(d >= 2 ? 0.0 : -c.l2.approx() * lr, c.l1 + c.l2);
        } else {
            out.subcase = "iii";
            g.z_punctured = true;
            g.w_punctured = true;
        }
        break;
    }
    case Case::boundary:
        break;
    }
    return out;
}

bool membership_oracle(const Classification& c, double r, int n, cplx z, cplx w)
{
    double lz = log_abs(z), lw = log_abs(w);
    for (int j = 0; j < n; ++j) {
        double nz = scaled(c.delta, lz);
        double nw = scaled(c.gamma, lz) + scaled(c.d, lw);
        lz = nz;
        lw = nw;
    }
    return WedgeRegion::of(c, r).contains_log(lz, lw);
}

bool VRegion::contains_log(double lz, double lw) const
{
    double hi = std::log(r1) + ext_times(a1, lz);
    double lo = -std::log(r2) + ext_times(a2, lz);
    return lo < lw && lw < hi;
}

bool VRegion::contains(cplx z, cplx w) const { return contains_log(log_abs(z), log_abs(w)); }

namespace {

std::vector<std::pair<double, double>> sample_v(const VRegion& v, int count, std::uint64_t seed)
{
    double xhi = 0.0;
    if (v.a1.finite() && v.a2.finite() && v.a2 > v.a1)
        xhi = std::min(0.0, (std::log(v.r1) + std::log(v.r2)) / (v.a2 - v.a1).approx());
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<double, double>> out;
    int misses = 0;
    while (static_cast<int>(out.size()) < count) {
        double x = xhi - kSpanZ * (0.001 + 0.999 * unit(gen));
        double hi = std::log(v.r1) + ext_times(v.a1, x);
        double lo = -std::log(v.r2) + ext_times(v.a2, x);
        if (std::isinf(hi) && std::isinf(lo)) {
            lo = -kSpanW;
            hi = kSpanW;
        } else if (std::isinf(hi)) {
            hi = lo + kSpanW;
        } else if (std::isinf(lo)) {
            lo = hi - kSpanW;
        }
        double y = lo + (hi - lo) * (0.001 + 0.998 * unit(gen));
        if (v.contains_log(x, y))
            out.emplace_back(x, y);
        else if (++misses > 10 * count)
            throw Error(errc::empty_region, "V has no sampleable interior");
    }
    return out;
}

}  // namespace

VCheck check_v_region(const Classification& c, const NewtonPolygon& np, double r, const VRegion& v, int count,
                      std::uint64_t seed)
{
    if (!(r <= v.r1 && v.r1 <= 1.0) || !(v.r2 > 0.0 && v.r2 <= 1.0))
        throw Error(errc::invalid_input, "V needs r <= r1 <= 1 and 0 < r2 <= 1");
    if (v.a1 > c.l1 || c.l1 + c.l2 > v.a2) throw Error(errc::invalid_input, "V needs a1 <= l1 <= l1+l2 <= a2");

    VCheck out;
    out.samples = count;
    for (auto& [z, w] : sample(WedgeRegion::of(c, r), count, seed)) {
        if (!v.contains(z, w)) {
            out.u_in_v = false;
            out.witness = Point{z, w};
            return out;
        }
    }
    const ExponentRegion basin = basin_descriptor(c, np, r).region;
    std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    for (auto [x, y] : sample_v(v, count, seed + 1)) {
        cplx z = std::polar(std::exp(x), phase(gen)), w = std::polar(std::exp(y), phase(gen));
        if (!basin.contains(z, w)) {
            out.v_in_basin = false;
            out.witness = Point{z, w};
            return out;
        }
    }
    return out;
}

VRegion v_region(const Classification& c, const NewtonPolygon& np, double r, const VRegion& v, int count,
                 std::uint64_t seed)
{
    VCheck chk = check_v_region(c, np, r, v, count, seed);
    if (chk.witness) {
        auto [z, w] = *chk.witness;
        std::ostringstream os;
        os << (chk.u_in_v ? "V leaves the basin" : "U is not inside V") << " at z=" << z << " w=" << w;
        throw Error(errc::inclusion_violation, os.str());
    }
    return v;
}

std::string raster_csv(const Classification& c, const NewtonPolygon& np, double r, int n,
                       const std::optional<VRegion>& v, const RasterSpec& spec)
{
    if (spec.width < 1 || spec.height < 1) throw Error(errc::invalid_input, "raster needs a positive grid");
    const WedgeRegion u = WedgeRegion::of(c, r);
    const ExponentRegion pre = preimage_region(c, r, n);
    const ExponentRegion basin = basin_descriptor(c, np, r).region;
    std::ostringstream os;
    os << "log_abs_z,log_abs_w,in_U,in_preimage,in_basin,in_V\n";
    for (int j = 0; j < spec.height; ++j) {
        double y = spec.lw_min + (spec.lw_max - spec.lw_min) * (j + 0.5) / spec.height;
        for (int i = 0; i < spec.width; ++i) {
            double x = spec.lz_min + (spec.lz_max - spec.lz_min) * (i + 0.5) / spec.width;
            os << fmt(x) << ',' << fmt(y) << ',' << u.contains_log(x, y) << ',' << pre.contains_log(x, y) << ','
               << basin.contains_log(x, y) << ',';
            if (v)
                os << v->contains_log(x, y);
            else
                os << "";
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace skew
