#pragma once

#include "skewdyn/newton.hpp"
#include "skewdyn/poly.hpp"
#include "skewdyn/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace tst {

using namespace skew;

struct Instance {
    std::string name;
    std::map<int, cplx> p;
    std::map<Exponent, cplx> q;
    Case kind;
    int k = 1;
    int gamma = 0;
    int d = 0;
    std::string l1 = "0";   // "inf" or p/q
    std::string l2 = "inf";
    std::vector<Case> alternatives{};  // Boundary only

    SkewProduct f() const { return {UniPoly(p), BiPoly(q)}; }
    bool boundary() const { return kind == Case::boundary; }
};

inline ExtRational weight_of(const std::string& s)
{
    if (s == "inf") return ExtRational::pos_inf();
    return ExtRational(parse_rational(s));
}

// Hand-labelled instances covering every case and several delta = T_k boundaries.
inline const std::vector<Instance>& corpus()
{
    static const std::vector<Instance> all = [] {
        const cplx i1{0.0, 1.0};
        std::vector<Instance> v;
        v.push_back({"c1-pure", {{2, 1.0}}, {{{0, 2}, 1.0}}, Case::case1, 1, 0, 2});
        v.push_back({"c1-unit", {{2, 1.0}, {3, 0.5}}, {{{0, 2}, 1.0}, {{0, 3}, 1.0}, {{2, 2}, 0.3 + 0.1 * i1}},
                     Case::case1, 1, 0, 2});
        v.push_back({"c1-gamma", {{2, 1.0}}, {{{1, 2}, 1.0}, {{2, 3}, 1.0}}, Case::case1, 1, 1, 2});
        v.push_back({"c1-fiber", {{2, 1.0}, {3, 0.5}}, {{{0, 2}, 1.0}, {{0, 3}, 0.3}, {{0, 4}, -0.1}}, Case::case1, 1,
                     0, 2});
        v.push_back({"c1-fiber3", {{3, 1.0}}, {{{0, 3}, 1.0}, {{0, 4}, 0.2 + 0.1 * i1}}, Case::case1, 1, 0, 3});
        v.push_back({"c1-d3", {{2, 1.0}, {3, 0.2}}, {{{1, 3}, 1.0}}, Case::case1, 1, 1, 3});
        v.push_back({"c1-deg0", {{2, 1.0}}, {{{3, 0}, 1.0}}, Case::case1, 1, 3, 0});
        v.push_back({"c2-a", {{3, 1.0}, {4, 0.7 + 0.2 * i1}}, {{{0, 4}, 1.0}, {{1, 2}, 1.0}, {{3, 3}, 0.5}},
                     Case::case2, 2, 1, 2, "1/2"});
        v.push_back({"c2-ex", {{3, 1.0}}, {{{1, 3}, 1.0}, {{4, 2}, 1.0}}, Case::case2, 2, 4, 2, "3"});
        v.push_back({"c2-b", {{2, 1.0}}, {{{1, 2}, 1.0}, {{0, 3}, 1.0}}, Case::case2, 2, 1, 2, "1"});
        v.push_back({"c2-dgt", {{2, 1.0}}, {{{0, 5}, 1.0}, {{1, 3}, 1.0}}, Case::case2, 2, 1, 3, "1/2"});
        v.push_back({"c2-d1", {{2, 1.0}, {3, 0.3}}, {{{3, 1}, 1.0}, {{1, 2}, 1.0}}, Case::case2, 2, 3, 1, "2"});
        v.push_back({"c3-a", {{4, 1.0}, {5, -0.5}}, {{{2, 2}, 1.0}, {{5, 0}, 1.0}, {{3, 2}, 0.4}}, Case::case3, 1, 2,
                     2, "0", "3/2"});
        v.push_back({"c3-ex", {{4, 1.0}}, {{{0, 3}, 1.0}, {{2, 1}, 1.0}}, Case::case3, 1, 0, 3, "0", "1"});
        v.push_back({"c3-b", {{3, 1.0}}, {{{0, 2}, 1.0}, {{3, 0}, 1.0}}, Case::case3, 1, 0, 2, "0", "3/2"});
        v.push_back({"c3-lin", {{3, 1.0}}, {{{1, 0}, 1.0}, {{0, 2}, 1.0}}, Case::case3, 1, 0, 2, "0", "1/2"});
        v.push_back({"c4-ex", {{3, 1.0}}, {{{0, 4}, 1.0}, {{2, 2}, 1.0}, {{5, 1}, 1.0}}, Case::case4, 2, 2, 2, "1",
                     "2"});
        v.push_back({"c4-a", {{3, 1.0}, {5, 1.0}}, {{{0, 4}, 1.0}, {{2, 2}, 1.0}, {{8, 0}, 1.0}, {{3, 2}, 0.3}},
                     Case::case4, 2, 2, 2, "1", "2"});
        v.push_back({"c4-k3", {{4, 1.0}}, {{{0, 6}, 1.0}, {{1, 4}, 1.0}, {{3, 2}, 1.0}, {{9, 0}, 1.0}}, Case::case4,
                     3, 3, 2, "1", "2"});
        v.push_back({"c4-d1", {{2, 1.0}, {3, 0.3}}, {{{0, 3}, 1.0}, {{1, 1}, 1.0}, {{4, 0}, 1.0}}, Case::case4, 2, 1,
                     1, "1/2", "5/2"});
        v.push_back({"bd-g1", {{2, 1.0}}, {{{1, 1}, 1.0}, {{2, 0}, 1.0}}, Case::boundary, 1, 0, 0, "", "",
                     {Case::case3, Case::case2}});
        v.push_back({"bd-g2", {{2, 1.0}}, {{{2, 1}, 1.0}, {{4, 0}, 1.0}}, Case::boundary, 1, 0, 0, "", "",
                     {Case::case3, Case::case2}});
        v.push_back({"bd-g3", {{2, 1.0}}, {{{3, 1}, 1.0}, {{6, 0}, 1.0}}, Case::boundary, 1, 0, 0, "", "",
                     {Case::case3, Case::case2}});
        v.push_back({"bd-d2", {{3, 1.0}}, {{{0, 3}, 1.0}, {{1, 2}, 1.0}}, Case::boundary, 1, 0, 0, "", "",
                     {Case::case3, Case::case2}});
        v.push_back({"bd-c4", {{4, 1.0}}, {{{0, 4}, 1.0}, {{1, 2}, 1.0}, {{5, 0}, 1.0}}, Case::boundary, 1, 0, 0, "",
                     "", {Case::case3, Case::case4}});
        v.push_back({"bd-inner", {{5, 1.0}}, {{{0, 6}, 1.0}, {{1, 4}, 1.0}, {{3, 2}, 1.0}, {{9, 0}, 1.0}},
                     Case::boundary, 2, 0, 0, "", "", {Case::case4, Case::case4}});
        return v;
    }();
    return all;
}

inline std::vector<Instance> select(bool (*keep)(const Instance&))
{
    std::vector<Instance> out;
    for (auto& in : corpus())
        if (keep(in)) out.push_back(in);
    return out;
}

inline bool verifiable_d2(const Instance& in) { return !in.boundary() && in.d >= 2; }
inline bool single_vertex_ok(const Instance& in) { return !in.boundary() && in.d >= 1; }

// seeded generators

struct Gen {
    std::mt19937_64 eng;
    explicit Gen(std::uint64_t seed) : eng(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
    double phase() { return real(0.0, 2.0 * M_PI); }
    cplx polar(double log_abs) { return std::polar(std::exp(log_abs), phase()); }

    Rational rational(int max_num, int max_den)
    {
        return Rational(integer(0, max_num), integer(1, max_den));
    }

    std::vector<Exponent> support(int max_terms, int max_exp)
    {
        std::set<Exponent> s;
        int n = integer(1, max_terms);
        while (static_cast<int>(s.size()) < n) s.insert({integer(0, max_exp), integer(0, max_exp)});
        return {s.begin(), s.end()};
    }
};

// brute-force hull: a Pareto-minimal point is a vertex unless it lies on or above a chord
// between two other Pareto-minimal points on either side of it
inline std::vector<Exponent> hull_oracle(const std::vector<Exponent>& support)
{
    std::vector<Exponent> pareto;
    for (auto& p : support) {
        bool dominated = false;
        for (auto& o : support)
            if (o != p && o.first <= p.first && o.second <= p.second) dominated = true;
        if (!dominated) pareto.push_back(p);
    }
    std::vector<Exponent> verts;
    for (auto& p : pareto) {
        bool vertex = true;
        for (auto& a : pareto)
            for (auto& c : pareto) {
                if (!(a.first < p.first && p.first < c.first)) continue;
                // chord height at p.first, compared without division
                long lhs = static_cast<long>(p.second) * (c.first - a.first);
                long rhs = static_cast<long>(a.second) * (c.first - p.first) +
                           static_cast<long>(c.second) * (p.first - a.first);
                if (lhs >= rhs) vertex = false;
            }
        if (vertex) verts.push_back(p);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

// intercept of the supporting line of slope through consecutive vertices a, b:
// min over the support of m + sigma n with sigma = (m_a - m_b)/(n_b - n_a)
inline Rational intercept_oracle(const std::vector<Exponent>& support, Exponent a, Exponent b)
{
    Rational sigma(a.second - b.second, b.first - a.first);
    Rational best = Rational(support.front().second) + sigma * support.front().first;
    for (auto& [n, m] : support) best = std::min(best, Rational(m) + sigma * n);
    return best;
}

// weight intervals from their defining inequalities

inline bool in_If_case2(const Classification& c, const std::vector<Exponent>& support, const Rational& l)
{
    if (l <= 0) return false;
    Rational mid = c.gamma + l * c.d;
    if (l * c.delta > mid) return false;
    for (auto& [i, j] : support)
        if (mid > i + l * j) return false;
    return true;
}

inline bool in_If_case3(const Classification& c, const std::vector<Exponent>& support, const Rational& l)
{
    if (l <= 0) return false;
    Rational lhs = c.gamma + l * c.d;
    if (lhs > l * c.delta) return false;
    for (auto& [i, j] : support)
        if (lhs > i + l * j) return false;
    return true;
}

inline bool in_If1_case4(const Classification& c, const NewtonPolygon& np, const Rational& l)
{
    if (l <= 0) return false;
    Rational lhs = c.gamma + l * c.d;
    for (int j = 1; j <= np.s(); ++j) {
        Rational rhs = np.n(j) + l * np.m(j);
        if (j < c.k_index && lhs > rhs) return false;
        if (j > c.k_index && lhs >= rhs) return false;
    }
    return l * c.delta <= lhs;
}

inline bool in_If2_case4(const Classification& c, const std::vector<Exponent>& support, const Rational& l_first,
                         const Rational& l)
{
    if (l <= 0) return false;
    Rational gt = c.gamma + l_first * c.d - l_first * c.delta;
    Rational lhs = gt + l * c.d;
    if (lhs > l * c.delta) return false;
    for (auto& [i, j] : support) {
        Rational it = i + l_first * j - l_first * c.delta;
        if (lhs > it + l * j) return false;
    }
    return true;
}

// gamma_n = sum_{j=1}^n delta^(n-j) d^(j-1) gamma
inline double gamma_n(int n, int delta, int gamma, int d)
{
    double s = 0.0;
    for (int j = 1; j <= n; ++j) s += std::pow(double(delta), n - j) * std::pow(double(d), j - 1) * gamma;
    return s;
}

}  // namespace tst
