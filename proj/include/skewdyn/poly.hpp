#pragma once

#include "skewdyn/rational.hpp"

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace skew {

using cplx = std::complex<double>;
using Exponent = std::pair<int, int>;         // (i, j) for z^i w^j
using RatExponent = std::pair<Rational, Rational>;

cplx checked_coeff(double re, double im);

// p(z) = sum a_k z^k with lowest term a_delta z^delta, delta >= 2
class UniPoly {
public:
    explicit UniPoly(std::map<int, cplx> coeffs);

    int delta() const { return delta_; }
    cplx leading() const { return coeffs_.begin()->second; }
    const std::map<int, cplx>& coeffs() const { return coeffs_; }
    int degree() const { return coeffs_.rbegin()->first; }

    cplx operator()(cplx z) const;
    // zeta(z) = (p(z) - a z^delta) / (a z^delta), evaluated without dividing by z
    cplx zeta(cplx z) const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::map<int, cplx> coeffs_;
    int delta_ = 0;
};

// q(z,w) = sum b_ij z^i w^j with nonzero coefficients only
class BiPoly {
public:
    BiPoly() = default;
    // germ = true enforces i+j >= 2 or (i,j) = (1,0)
    explicit BiPoly(std::map<Exponent, cplx> coeffs, bool germ = true);

    const std::map<Exponent, cplx>& coeffs() const { return coeffs_; }
    std::vector<Exponent> support() const;
    cplx coeff(int i, int j) const;
    bool empty() const { return coeffs_.empty(); }

    cplx operator()(cplx z, cplx w) const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    std::map<Exponent, cplx> coeffs_;
};

struct SkewProduct {
    UniPoly p;
    BiPoly q;

    std::pair<cplx, cplx> operator()(cplx z, cplx w) const { return {p(z), q(z, w)}; }
};

cplx eval_p(const UniPoly& p, cplx z);
cplx eval_q(const BiPoly& q, cplx z, cplx w);

// (i, j) -> (m11 i + m12 j + c1, m21 i + m22 j + c2)
struct ExpTransform {
    Rational m11{1}, m12{0}, m21{0}, m22{1};
    Rational c1{0}, c2{0};

    static ExpTransform identity() { return {}; }
    RatExponent apply(const Rational& i, const Rational& j) const;
};

BiPoly substitute_exponents(const BiPoly& q, const ExpTransform& t);

}  // namespace skew
