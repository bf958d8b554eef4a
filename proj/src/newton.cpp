#include "skewdyn/newton.hpp"

#include "skewdyn/error.hpp"

#include <algorithm>

namespace skew {

namespace {

// z-component of (a - o) x (b - o)
Rational cross(const RatExponent& o, const RatExponent& a, const RatExponent& b)
{
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

Rational intercept(const Exponent& a, const Exponent& b)
{
    Rational n1 = a.first, m1 = a.second, n2 = b.first, m2 = b.second;
    return m1 + n1 * (m1 - m2) / (n2 - n1);
}

}  // namespace

std::vector<RatExponent> staircase_hull(std::vector<RatExponent> pts)
{
    std::sort(pts.begin(), pts.end());
    std::vector<RatExponent> stair;
    for (auto& p : pts)
        if (stair.empty() || p.second < stair.back().second) stair.push_back(p);

    std::vector<RatExponent> hull;
    for (auto& p : stair) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

std::vector<RatExponent> to_rational(const std::vector<Exponent>& support)
{
    std::vector<RatExponent> out;
    out.reserve(support.size());
    for (auto& [i, j] : support) out.emplace_back(Rational(i), Rational(j));
    return out;
}

NewtonPolygon newton_polygon(const std::vector<Exponent>& support)
{
    if (support.empty()) throw Error(errc::invalid_input, "empty support");
    NewtonPolygon np;
    for (auto& [x, y] : staircase_hull(to_rational(support)))
        np.vertices.emplace_back(x.convert_to<int>(), y.convert_to<int>());
    for (int k = 0; k + 1 < np.s(); ++k) np.intercepts.push_back(intercept(np.vertices[k], np.vertices[k + 1]));
    return np;
}

NewtonPolygon newton_polygon(const BiPoly& q)
{
    NewtonPolygon np = newton_polygon(q.support());
    for (auto& [i, j] : np.vertices) np.vertex_coeffs.push_back(q.coeff(i, j));
    return np;
}

const char* case_name(Case c)
{
    switch (c) {
    case Case::case1: return "Case1";
    case Case::case2: return "Case2";
    case Case::case3: return "Case3";
    case Case::case4: return "Case4";
    case Case::boundary: return "Boundary";
    }
    return "?";
}

Classification classify_at_vertex(const NewtonPolygon& np, int delta, int v)
{
    const int s = np.s();
    if (v < 1 || v > s) throw Error(errc::invalid_input, "vertex index out of range");
    Classification c;
    c.delta = delta;
    c.k_index = v;
    c.gamma = np.n(v);
    c.d = np.m(v);
    if (!np.vertex_coeffs.empty()) c.b = np.vertex_coeffs.at(v - 1);

    auto edge_weight = [&](int a) {  // weight of the edge from vertex a to a+1
        return Rational(np.n(a + 1) - np.n(a), np.m(a) - np.m(a + 1));
    };
    if (s == 1) {
        c.kind = Case::case1;
        c.l1 = Weight(0);
        c.l2 = Weight::pos_inf();
    } else if (v == s) {
        c.kind = Case::case2;
        c.l1 = Weight(edge_weight(s - 1));
        c.l2 = Weight::pos_inf();
    } else if (v == 1) {
        c.kind = Case::case3;
        c.l1 = Weight(0);
        c.l2 = Weight(edge_weight(1));
    } else {
        c.kind = Case::case4;
        c.l1 = Weight(edge_weight(v - 1));
        c.l2 = Weight(edge_weight(v) - edge_weight(v - 1));
    }
    Rational dl(delta);
    c.on_boundary = (v > 1 && np.T(v - 1) == dl) || (v < s && np.T(v) == dl);
    return c;
}

Classification classify(const NewtonPolygon& np, int delta)
{
    if (delta < 2) throw Error(errc::invalid_input, "delta must be >= 2");
    const int s = np.s();
    if (s == 1) return classify_at_vertex(np, delta, 1);

    Rational dl(delta);
    for (int k = 1; k < s; ++k) {
        if (np.T(k) == dl) {
            Classification c = classify_at_vertex(np, delta, k);
            c.alternatives = {c, classify_at_vertex(np, delta, k + 1)};
            c.kind = Case::boundary;
            c.k_index = k;
            return c;
        }
    }
    // T_k strictly decreasing: dominant vertex is the first k with T_k < delta
    int v = s;
    for (int k = 1; k < s; ++k) {
        if (np.T(k) < dl) {
            v = k;
            break;
        }
    }
    return classify_at_vertex(np, delta, v);
}

Classification classify(const SkewProduct& f) { return classify(newton_polygon(f.q), f.p.delta()); }

Interval weight_interval_2(const Classification& c, const Rational& l_first)
{
    if (c.kind != Case::case4) throw Error(errc::guard_violation, "I_f^2 is defined for Case 4 only");
    Rational alpha0 = make_rational(c.gamma, c.delta - c.d);
    Rational top = (c.l1 + c.l2).value();
    Interval positive{ExtRational(0), ExtRational::pos_inf(), false, false};
    return Interval::closed(ExtRational(alpha0 - l_first), ExtRational(top - l_first)).intersect(positive);
}

WeightIntervals weight_intervals(const Classification& c, const NewtonPolygon& np, int delta)
{
    if (c.kind == Case::boundary)
        throw Error(errc::guard_violation, "weight intervals at a boundary come from the alternatives");
    (void)np;
    WeightIntervals out;
    out.alpha0 = delta == c.d ? ExtRational::pos_inf() : ExtRational(make_rational(c.gamma, delta - c.d));
    const Interval positive{ExtRational(0), ExtRational::pos_inf(), false, false};

    switch (c.kind) {
    case Case::case1:
        out.i1 = Interval::point(ExtRational(0));
        break;
    case Case::case2:
        if (delta > c.d)
            out.i1 = Interval::closed(c.l1, out.alpha0);
        else
            out.i1 = Interval{c.l1, ExtRational::pos_inf(), true, false};
        break;
    case Case::case3:
        if (c.gamma > 0)
            out.i1 = Interval::closed(out.alpha0, c.l2);
        else
            out.i1 = Interval{ExtRational(0), c.l2, false, true};
        break;
    case Case::case4: {
        ExtRational top = c.l1 + c.l2;
        Interval a{c.l1, top, true, false};
        out.i1 = a.intersect(Interval{ExtRational(0), out.alpha0, false, true});
        out.i2 = weight_interval_2(c, c.l1.value());
        Interval sums = Interval::closed(out.alpha0, top);
        out.rectangle = std::make_pair(out.i1, sums);
        break;
    }
    default:
        break;
    }
    return out;
}

std::vector<RatExponent> transform_A1(const std::vector<RatExponent>& support, const Weight& l1, int delta)
{
    if (!l1.finite()) throw Error(errc::invalid_input, "A1 needs a finite weight");
    const Rational& l = l1.value();
    std::vector<RatExponent> out;
    for (auto& [i, j] : support) out.emplace_back(i + l * j - l * delta, j);
    return out;
}

std::vector<RatExponent> transform_A2(const std::vector<RatExponent>& support, const Weight& l2_inv)
{
    if (!l2_inv.finite()) throw Error(errc::invalid_input, "A2 needs a finite inverse weight");
    const Rational& li = l2_inv.value();
    std::vector<RatExponent> out;
    for (auto& [i, j] : support) out.emplace_back(i, li * i + j);
    return out;
}

}  // namespace skew
