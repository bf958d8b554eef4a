#include "skewdyn/poly.hpp"

#include "skewdyn/error.hpp"

#include <cmath>
#include <string>

namespace skew {

namespace {

cplx ipow(cplx x, int n)
{
    cplx acc{1.0, 0.0};
    for (; n > 0; --n) acc *= x;
    return acc;
}

std::string monomial_name(int i, int j) { return "z^" + std::to_string(i) + " w^" + std::to_string(j); }

}  // namespace

const char* errc_name(errc code)
{
    switch (code) {
    case errc::invalid_input: return "InvalidInput";
    case errc::non_integral_exponent: return "NonIntegralExponent";
    case errc::weight_outside_interval: return "WeightOutsideInterval";
    case errc::divisibility_failure: return "DivisibilityFailure";
    case errc::division_near_zero: return "DivisionNearZero";
    case errc::empty_band: return "EmptyBand";
    case errc::empty_region: return "EmptyRegion";
    case errc::branch_domain: return "BranchDomainError";
    case errc::no_contraction: return "NoContraction";
    case errc::no_convergence: return "NoConvergence";
    case errc::guard_violation: return "GuardViolation";
    case errc::inclusion_violation: return "InclusionViolation";
    }
    return "Unknown";
}

cplx checked_coeff(double re, double im)
{
    if (!std::isfinite(re) || !std::isfinite(im))
        throw Error(errc::invalid_input, "coefficient is not finite");
    return {re, im};
}

UniPoly::UniPoly(std::map<int, cplx> coeffs)
{
    for (auto& [k, a] : coeffs) {
        if (k < 0) throw Error(errc::invalid_input, "negative exponent in p: " + std::to_string(k));
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw Error(errc::invalid_input, "non-finite coefficient of z^" + std::to_string(k));
        if (a != cplx{}) coeffs_.emplace(k, a);
    }
    if (coeffs_.empty()) throw Error(errc::invalid_input, "p is identically zero");
    delta_ = coeffs_.begin()->first;
    if (delta_ < 2)
        throw Error(errc::invalid_input,
                    "p must vanish to order >= 2 at 0, found term z^" + std::to_string(delta_));
}

cplx UniPoly::operator()(cplx z) const
{
    cplx acc{};
    for (auto& [k, a] : coeffs_) acc += a * ipow(z, k);
    return acc;
}

cplx UniPoly::zeta(cplx z) const
{
    cplx acc{};
    const cplx a = leading();
    for (auto it = std::next(coeffs_.begin()); it != coeffs_.end(); ++it)
        acc += (it->second / a) * ipow(z, it->first - delta_);
    return acc;
}

BiPoly::BiPoly(std::map<Exponent, cplx> coeffs, bool germ)
{
    for (auto& [e, b] : coeffs) {
        auto [i, j] = e;
        if (i < 0 || j < 0) throw Error(errc::invalid_input, "negative exponent in " + monomial_name(i, j));
        if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw Error(errc::invalid_input, "non-finite coefficient of " + monomial_name(i, j));
        if (b == cplx{}) continue;
        if (germ && i + j < 2 && !(i == 1 && j == 0))
            throw Error(errc::invalid_input,
                        "monomial " + monomial_name(i, j) + " breaks the superattracting germ form");
        coeffs_.emplace(e, b);
    }
    if (coeffs_.empty()) throw Error(errc::invalid_input, "q is identically zero");
}

std::vector<Exponent> BiPoly::support() const
{
    std::vector<Exponent> out;
    out.reserve(coeffs_.size());
    for (auto& kv : coeffs_) out.push_back(kv.first);
    return out;
}

cplx BiPoly::coeff(int i, int j) const
{
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? cplx{} : it->second;
}

cplx BiPoly::operator()(cplx z, cplx w) const
{
    cplx acc{};
    for (auto& [e, b] : coeffs_) acc += b * ipow(z, e.first) * ipow(w, e.second);
    return acc;
}

cplx eval_p(const UniPoly& p, cplx z) { return p(z); }

cplx eval_q(const BiPoly& q, cplx z, cplx w) { return q(z, w); }

RatExponent ExpTransform::apply(const Rational& i, const Rational& j) const
{
    return {m11 * i + m12 * j + c1, m21 * i + m22 * j + c2};
}

BiPoly substitute_exponents(const BiPoly& q, const ExpTransform& t)
{
    std::map<Exponent, cplx> out;
    for (auto& [e, b] : q.coeffs()) {
        auto [x, y] = t.apply(e.first, e.second);
        if (!is_integer(x) || !is_integer(y))
            throw Error(errc::non_integral_exponent,
                        "exponent (" + to_string(x) + ", " + to_string(y) + ") is not integral");
        if (x < 0 || y < 0)
            throw Error(errc::invalid_input,
                        "exponent (" + to_string(x) + ", " + to_string(y) + ") is negative");
        out[{x.convert_to<int>(), y.convert_to<int>()}] += b;
    }
    return BiPoly(std::move(out), false);
}

}  // namespace skew
